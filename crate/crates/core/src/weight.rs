//! Weight vectors in the `(e_1..e_m | d_1..d_n)` basis and the diagonal
//! metric that pairs them.

use crate::rational::{fmt_q, Q};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub e: Vec<Q>,
    pub d: Vec<Q>,
}

impl WeightVector {
    pub fn zero(m: usize, n: usize) -> Self {
        WeightVector { e: vec![Q::zero(); m], d: vec![Q::zero(); n] }
    }

    /// Unit vector `e_i` (0-based).
    pub fn e(m: usize, n: usize, i: usize) -> Self {
        let mut w = Self::zero(m, n);
        w.e[i] = Q::from_integer(1);
        w
    }

    /// Unit vector `d_j` (0-based).
    pub fn d(m: usize, n: usize, j: usize) -> Self {
        let mut w = Self::zero(m, n);
        w.d[j] = Q::from_integer(1);
        w
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().chain(&self.d).all(Zero::is_zero)
    }

    pub fn has_e(&self) -> bool {
        self.e.iter().any(|x| !x.is_zero())
    }

    pub fn has_d(&self) -> bool {
        self.d.iter().any(|x| !x.is_zero())
    }

    pub fn coords(&self) -> Vec<Q> {
        self.e.iter().chain(&self.d).copied().collect()
    }

    pub fn from_coords(m: usize, coords: &[Q]) -> Self {
        WeightVector { e: coords[..m].to_vec(), d: coords[m..].to_vec() }
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, o: &WeightVector) -> WeightVector {
        WeightVector {
            e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect(),
            d: self.d.iter().zip(&o.d).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, o: &WeightVector) -> WeightVector {
        self + &(-o)
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector { e: self.e.iter().map(|a| -a).collect(), d: self.d.iter().map(|a| -a).collect() }
    }
}

impl Mul<&WeightVector> for Q {
    type Output = WeightVector;
    fn mul(self, w: &WeightVector) -> WeightVector {
        WeightVector { e: w.e.iter().map(|a| self * a).collect(), d: w.d.iter().map(|a| self * a).collect() }
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.e.iter().map(fmt_q).collect();
        let d: Vec<String> = self.d.iter().map(fmt_q).collect();
        write!(f, "({} | {})", e.join(","), d.join(","))
    }
}

/// Diagonal bilinear form. The standard signature is `+1` on every `e_i`
/// and `-1` on every `d_j`; the exceptional families use other weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    pub e: Vec<Q>,
    pub d: Vec<Q>,
}

impl Metric {
    pub fn standard(m: usize, n: usize) -> Self {
        Metric { e: vec![Q::from_integer(1); m], d: vec![Q::from_integer(-1); n] }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.e.len(), self.d.len())
    }

    pub fn inner(&self, u: &WeightVector, v: &WeightVector) -> Q {
        let es = self.e.iter().zip(u.e.iter().zip(&v.e)).map(|(g, (a, b))| g * a * b);
        let ds = self.d.iter().zip(u.d.iter().zip(&v.d)).map(|(g, (a, b))| g * a * b);
        es.chain(ds).fold(Q::zero(), |acc, x| acc + x)
    }

    pub fn norm(&self, u: &WeightVector) -> Q {
        self.inner(u, u)
    }
}
