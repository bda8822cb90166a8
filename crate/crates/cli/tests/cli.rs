use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supervogan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn diagram_ascii() {
    let o = run(&["diagram", "A(1,1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "o---(x)---o\n");
    assert!(stderr(&o).is_empty());
}

#[test]
fn parse_error_points_at_the_token() {
    let o = run(&["diagram", "A(1,x)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    let err = stderr(&o);
    assert!(err.starts_with("error: "), "{err}");
    let lines: Vec<&str> = err.lines().collect();
    assert_eq!(lines[1], "  A(1,x)");
    assert_eq!(lines[2], "      ^");
}

#[test]
fn zero_alpha_is_rejected() {
    let o = run(&["diagram", "D(2,1;0)"]);
    assert!(!o.status.success());
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn rank_guard() {
    let o = run(&["enumerate", "A(6,6)"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("12"), "{}", stderr(&o));
}

#[test]
fn painting_an_odd_node_is_a_bad_index() {
    let o = run(&["reduce", "A(1,1)", "--painted", "2"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains('2'));
}

#[test]
fn reduce_reports_flips() {
    let o = run(&["reduce", "A(3,0)", "--painted", "1,3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("o---*---o"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("flips: ") && l != "flips: none"), "{out}");

    let o = run(&["reduce", "A(3,0)"]);
    assert!(stdout(&o).contains("flips: none"));
}

#[test]
fn reduce_json_document() {
    let o = run(&["--format", "json", "reduce", "A(3,0)", "--painted", "1,3"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["diagram"]["schema_version"], "1");
    let painted: Vec<u64> = doc["diagram"]["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|n| n["painted"] == true)
        .map(|n| n["index"].as_u64().unwrap())
        .collect();
    assert_eq!(painted, vec![2]);
    assert!(!doc["trail"].as_array().unwrap().is_empty());
}

#[test]
fn enumerate_json_is_an_array_of_documents() {
    let o = run(&["--format", "json", "enumerate", "F(4)", "--reduce", "--classify"]);
    assert!(o.status.success());
    let docs: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(docs.len(), 4);
    for d in &docs {
        for key in ["schema_version", "family", "nodes", "arrows", "realform"] {
            assert!(d.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn classify_names_the_form() {
    let o = run(&["classify", "B(0,2)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("real form: osp(1|4;R) [sp(4,R)]"), "{}", stdout(&o));
}

#[test]
fn out_writes_the_file_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g3.json");
    let o = run(&["--format", "json", "--out", path.to_str().unwrap(), "enumerate", "G(3)", "--reduce", "--classify"]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let docs: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(docs.len(), 2);
}

#[test]
fn out_to_a_missing_directory_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no/such/dir/x.txt");
    let o = run(&["--out", path.to_str().unwrap(), "diagram", "G(3)"]);
    assert!(!o.status.success());
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn tables_have_no_mismatch_markers() {
    for spec in ["B(0,1)", "B(0,2)", "B(0,3)", "B(0,n)", "G(3)", "F(4)", "D(2,1;1)"] {
        let o = run(&["table", spec]);
        assert_eq!(o.status.code(), Some(0), "{spec}: {}", stderr(&o));
        assert!(!stdout(&o).contains("MISMATCH"), "{spec}:\n{}", stdout(&o));
    }
}

#[test]
fn symbolic_table_rows() {
    let o = run(&["table", "B(m,n)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("so(2m+1)⊕sp(2n)"), "{}", stdout(&o));
    let o = run(&["table", "A(n,n)"]);
    assert!(stdout(&o).contains("psl(n|n;R)"));
}

#[test]
fn table_has_no_dot_form() {
    let o = run(&["--format", "dot", "table", "F(4)"]);
    assert!(!o.status.success());
}

// ---------------------------------------------------------------- DOT

/// Recursive-descent checker for the DOT language (graph, digraph and
/// strict; statements, attribute lists, subgraphs; quoted, numeric and
/// identifier IDs). Returns the number of graphs parsed.
mod dot {
    #[derive(Debug, Clone, PartialEq)]
    enum Tok {
        Id(String),
        Sym(char),
        Edge(&'static str),
    }

    fn lex(s: &str) -> Result<Vec<Tok>, String> {
        let c: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut out = Vec::new();
        while i < c.len() {
            let ch = c[i];
            if ch.is_whitespace() {
                i += 1;
            } else if ch == '/' && c.get(i + 1) == Some(&'/') {
                while i < c.len() && c[i] != '\n' {
                    i += 1;
                }
            } else if ch == '/' && c.get(i + 1) == Some(&'*') {
                i += 2;
                while i + 1 < c.len() && !(c[i] == '*' && c[i + 1] == '/') {
                    i += 1;
                }
                if i + 1 >= c.len() {
                    return Err("unterminated comment".into());
                }
                i += 2;
            } else if ch == '-' && c.get(i + 1) == Some(&'-') {
                out.push(Tok::Edge("--"));
                i += 2;
            } else if ch == '-' && c.get(i + 1) == Some(&'>') {
                out.push(Tok::Edge("->"));
                i += 2;
            } else if "{}[];,=:".contains(ch) {
                out.push(Tok::Sym(ch));
                i += 1;
            } else if ch == '"' {
                let mut text = String::new();
                i += 1;
                loop {
                    match c.get(i) {
                        None => return Err("unterminated string".into()),
                        Some('\\') => {
                            text.push(c.get(i + 1).copied().ok_or("dangling escape")?);
                            i += 2;
                        }
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some(&x) => {
                            text.push(x);
                            i += 1;
                        }
                    }
                }
                out.push(Tok::Id(text));
            } else if ch.is_alphanumeric() || ch == '_' || ch == '.' || ch == '-' {
                let start = i;
                while i < c.len() && (c[i].is_alphanumeric() || c[i] == '_' || c[i] == '.') {
                    i += 1;
                }
                if i == start {
                    return Err(format!("stray '{ch}'"));
                }
                out.push(Tok::Id(c[start..i].iter().collect()));
            } else {
                return Err(format!("unexpected '{ch}'"));
            }
        }
        Ok(out)
    }

    struct P {
        t: Vec<Tok>,
        k: usize,
        directed: bool,
    }

    impl P {
        fn peek(&self) -> Option<&Tok> {
            self.t.get(self.k)
        }
        fn sym(&mut self, c: char) -> bool {
            if self.peek() == Some(&Tok::Sym(c)) {
                self.k += 1;
                true
            } else {
                false
            }
        }
        fn expect(&mut self, c: char) -> Result<(), String> {
            if self.sym(c) {
                Ok(())
            } else {
                Err(format!("expected '{c}' at token {} ({:?})", self.k, self.peek()))
            }
        }
        fn id(&mut self) -> Option<String> {
            if let Some(Tok::Id(s)) = self.peek() {
                let s = s.clone();
                self.k += 1;
                Some(s)
            } else {
                None
            }
        }
        fn keyword(&mut self, w: &str) -> bool {
            if matches!(self.peek(), Some(Tok::Id(s)) if s.eq_ignore_ascii_case(w)) {
                self.k += 1;
                true
            } else {
                false
            }
        }
        fn graph(&mut self) -> Result<(), String> {
            self.keyword("strict");
            self.directed = if self.keyword("graph") {
                false
            } else if self.keyword("digraph") {
                true
            } else {
                return Err("expected graph or digraph".into());
            };
            self.id();
            self.expect('{')?;
            self.stmts()?;
            self.expect('}')
        }
        fn stmts(&mut self) -> Result<(), String> {
            while self.peek().is_some() && self.peek() != Some(&Tok::Sym('}')) {
                self.stmt()?;
                self.sym(';');
            }
            Ok(())
        }
        fn attr_lists(&mut self) -> Result<usize, String> {
            let mut n = 0;
            while self.sym('[') {
                while !self.sym(']') {
                    self.id().ok_or_else(|| format!("attribute name expected at token {}", self.k))?;
                    self.expect('=')?;
                    self.id().ok_or_else(|| format!("attribute value expected at token {}", self.k))?;
                    if !self.sym(',') {
                        self.sym(';');
                    }
                }
                n += 1;
            }
            Ok(n)
        }
        fn node_or_subgraph(&mut self) -> Result<(), String> {
            if self.keyword("subgraph") {
                self.id();
                self.expect('{')?;
                self.stmts()?;
                return self.expect('}');
            }
            if self.peek() == Some(&Tok::Sym('{')) {
                self.k += 1;
                self.stmts()?;
                return self.expect('}');
            }
            self.id().ok_or_else(|| format!("node id expected at token {} ({:?})", self.k, self.peek()))?;
            if self.sym(':') {
                self.id().ok_or("port expected")?;
                if self.sym(':') {
                    self.id().ok_or("compass point expected")?;
                }
            }
            Ok(())
        }
        fn stmt(&mut self) -> Result<(), String> {
            if self.keyword("graph") || self.keyword("node") || self.keyword("edge") {
                if self.attr_lists()? == 0 {
                    return Err("attribute statement without a list".into());
                }
                return Ok(());
            }
            // `ID = ID`
            if matches!(self.t.get(self.k), Some(Tok::Id(_))) && self.t.get(self.k + 1) == Some(&Tok::Sym('=')) {
                self.k += 2;
                self.id().ok_or("value expected")?;
                return Ok(());
            }
            self.node_or_subgraph()?;
            while let Some(Tok::Edge(op)) = self.peek() {
                let want = if self.directed { "->" } else { "--" };
                if *op != want {
                    return Err(format!(
                        "edge operator {op} in a {} graph",
                        if self.directed { "directed" } else { "undirected" }
                    ));
                }
                self.k += 1;
                self.node_or_subgraph()?;
            }
            self.attr_lists()?;
            Ok(())
        }
    }

    pub fn check(text: &str) -> Result<usize, String> {
        let mut p = P { t: lex(text)?, k: 0, directed: false };
        let mut graphs = 0;
        while p.peek().is_some() {
            p.graph()?;
            graphs += 1;
        }
        if graphs == 0 {
            return Err("no graph".into());
        }
        Ok(graphs)
    }

    #[test]
    fn checker_rejects_bad_input() {
        assert!(check("graph { a -- b; }").is_ok());
        assert!(check("digraph g { a -> b [label=\"x\"]; }").is_ok());
        assert!(check("graph { a -> b }").is_err());
        assert!(check("graph { a -- }").is_err());
        assert!(check("graph { a [label=] }").is_err());
        assert!(check("graph { \"open }").is_err());
        assert!(check("graph { a -- b ").is_err());
    }
}

#[test]
fn dot_output_is_valid() {
    for spec in ["A(1,1)", "A(2,2)", "B(0,1)", "B(2,1)", "C(3)", "D(3,1)", "D(2,1;1)", "F(4)", "G(3)"] {
        let o = run(&["--format", "dot", "enumerate", spec, "--reduce", "--classify"]);
        assert!(o.status.success(), "{spec}");
        let text = stdout(&o);
        let n = dot::check(&text).unwrap_or_else(|e| panic!("{spec}: {e}\n{text}"));
        assert!(n >= 1);
        let o = run(&["--format", "dot", "reduce", spec]);
        dot::check(&stdout(&o)).unwrap_or_else(|e| panic!("{spec} reduce: {e}"));
    }
}
