//! Cartan matrices, symmetrizers and dual bases of even blocks.

use crate::diagram::SuperDynkinDiagram;
use crate::error::{Error, Result};
use crate::rational::{q, Matrix, Q};
use crate::weight::{Metric, WeightVector};
use num_traits::{Signed, Zero};
use std::collections::VecDeque;

pub fn gram_matrix(metric: &Metric, roots: &[WeightVector]) -> Matrix {
    Matrix::from_fn(roots.len(), roots.len(), |i, j| metric.inner(&roots[i], &roots[j]))
}

/// Cartan entries from a Gram matrix.
///
/// A non-isotropic row is `2<a_i,a_j>/<a_i,a_i>`. An isotropic row is the
/// Gram row divided by its largest off-diagonal magnitude among the first
/// `scale_cols` columns.
pub fn cartan_entries(gram: &Matrix, scale_cols: usize) -> Result<Matrix> {
    let n = gram.nrows();
    let mut a = Matrix::zeros(n, gram.ncols());
    for i in 0..n {
        let diag = gram[(i, i)];
        let scale = if diag.is_zero() {
            let s = (0..scale_cols.min(gram.ncols()))
                .filter(|&j| j != i)
                .map(|j| gram[(i, j)].abs())
                .max()
                .unwrap_or_else(Q::zero);
            if s.is_zero() {
                return Err(Error::SingularNormalization(i));
            }
            s
        } else {
            diag / q(2)
        };
        for j in 0..gram.ncols() {
            a[(i, j)] = gram[(i, j)] / scale;
        }
    }
    Ok(a)
}

/// Cartan matrix `a`, symmetrizer `eps` and `s = diag(eps) * a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub a: Matrix,
    pub eps: Vec<Q>,
    pub s: Matrix,
}

/// Cartan data of the distinguished simple system (auxiliary nodes excluded).
///
/// `eps` is obtained by propagating `eps_j = eps_i a_ij / a_ji` along the
/// edges, then rescaled once so that `s` coincides with the Gram matrix of
/// the simple roots.
pub fn cartan_matrix(diagram: &SuperDynkinDiagram) -> Result<CartanData> {
    let roots = diagram.simple_roots();
    let r = roots.len();
    let gram = gram_matrix(&diagram.metric, &roots);
    let a = cartan_entries(&gram, r)?;

    let mut eps: Vec<Option<Q>> = vec![None; r];
    for start in 0..r {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(q(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let ei = eps[i].unwrap();
            for j in 0..r {
                if j != i && eps[j].is_none() && !a[(i, j)].is_zero() {
                    eps[j] = Some(ei * a[(i, j)] / a[(j, i)]);
                    queue.push_back(j);
                }
            }
        }
    }
    let mut eps: Vec<Q> = eps.into_iter().map(Option::unwrap).collect();
    // one normalization per connected diagram; ours are all connected
    if let Some(k) = (0..r).find(|&k| !gram[(k, k)].is_zero()) {
        let factor = gram[(k, k)] / (q(2) * eps[k]);
        eps.iter_mut().for_each(|e| *e *= factor);
    } else if let Some((i, j)) = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero()) {
        let factor = gram[(i, j)] / (eps[i] * a[(i, j)]);
        eps.iter_mut().for_each(|e| *e *= factor);
    }
    let s = a.scale_rows(&eps);
    Ok(CartanData { a, eps, s })
}

/// Connected even blocks: components of all even nodes (auxiliary ones
/// included), ordered by their smallest node index.
pub fn even_blocks(diagram: &SuperDynkinDiagram) -> Vec<Vec<usize>> {
    let mut blocks = diagram.even_components(&diagram.even_nodes());
    blocks.sort();
    blocks
}

/// Symmetrizer entry of an even node, `<a_k, a_k> / 2`.
pub fn node_eps(diagram: &SuperDynkinDiagram, k: usize) -> Q {
    diagram.inner(k, k) / q(2)
}

/// Dual basis `w_j` of block `block` with `<w_j, a_k> = delta_jk / eps_k`.
pub fn dual_basis(diagram: &SuperDynkinDiagram, block: usize) -> Result<Vec<WeightVector>> {
    let blocks = even_blocks(diagram);
    let nodes = blocks.get(block).ok_or(Error::NoSuchBlock(block))?;
    dual_basis_of(diagram, nodes).ok_or(Error::SingularBlock(block))
}

/// Dual basis for an arbitrary set of even nodes; `None` if their Gram
/// block is singular.
pub fn dual_basis_of(diagram: &SuperDynkinDiagram, nodes: &[usize]) -> Option<Vec<WeightVector>> {
    let roots: Vec<WeightVector> = nodes.iter().map(|&i| diagram.nodes[i].root.clone()).collect();
    let g = gram_matrix(&diagram.metric, &roots);
    let ginv = g.inverse()?;
    let inv_eps: Vec<Q> = nodes.iter().map(|&k| q(1) / node_eps(diagram, k)).collect();
    // coefficients C = diag(1/eps) * G^{-1}
    let c = ginv.scale_rows(&inv_eps);
    let (m, n) = diagram.metric.dims();
    Some(
        (0..nodes.len())
            .map(|j| roots.iter().enumerate().fold(WeightVector::zero(m, n), |acc, (l, r)| &acc + &(c[(j, l)] * r)))
            .collect(),
    )
}

/// Sign of the block's symmetrizer (all entries of a connected even block
/// share one sign).
pub fn block_sign(diagram: &SuperDynkinDiagram, nodes: &[usize]) -> i32 {
    crate::rational::sign(&node_eps(diagram, nodes[0]))
}
