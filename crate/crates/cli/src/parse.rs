//! Parsers for the algebra definition format and for matrix files.
//!
//! Algebra files are UTF-8 text, `#` starts a comment. Header lines first:
//!
//!   leibniz              (optional; switches to the product-table grammar)
//!   field Q              (or `field Fp <p>`; defaults to Q)
//!   dim <n>
//!   basis a b c ...      (optional; defaults to e0 e1 ...)
//!
//! then product lines, one per line:
//!
//!   [a,b] = 2*c + 1/2*d - e        (LY grammar: bracket)
//!   {a,b,c} = e                    (LY grammar: ternary product)
//!   a * b = c - 3*d                (leibniz grammar)
//!
//! Only one orientation of a bracket or ternary product may be listed; the
//! loader antisymmetrizes the first two slots and zero-fills the rest.
//! Matrix files are rows of whitespace-separated exact scalars (`p/q`
//! rationals or residues), one row per line.

use lyat_core::algebra::{AlgebraError, LYAlgebra};
use lyat_core::field::Field;
use lyat_core::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldChoice {
    Q,
    Fp(u64),
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Q);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("Fp "))
            .or_else(|| s.strip_prefix("fp:"))
            .or_else(|| s.strip_prefix("fp "))
            .ok_or_else(|| format!("unknown field `{s}` (expected Q or Fp:<p>)"))?;
        let p: u64 = rest
            .trim()
            .parse()
            .map_err(|_| format!("bad prime `{rest}`"))?;
        if !lyat_core::field::is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        if p == 2 || p == 3 {
            return Err(format!(
                "characteristic {p} is excluded by default (the ternary constructions divide by 2 and 3)"
            ));
        }
        Ok(FieldChoice::Fp(p))
    }

    pub fn label(&self) -> String {
        match self {
            FieldChoice::Q => "Q".into(),
            FieldChoice::Fp(p) => format!("F_{p}"),
        }
    }
}

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.message)
        } else {
            write!(f, "{}", self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Ly,
    Leibniz,
}

/// Field-independent first pass over an algebra file.
pub struct RawAlgebra {
    pub field: Option<FieldChoice>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub kind: TableKind,
    /// (line number, text) of each product line.
    pub products: Vec<(usize, String)>,
}

pub fn scan_algebra(text: &str) -> Result<RawAlgebra, ParseError> {
    let mut field = None;
    let mut dim = None;
    let mut labels: Option<Vec<String>> = None;
    let mut kind = TableKind::Ly;
    let mut products = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.split_once('#') {
            Some((before, _)) => before.trim(),
            None => raw_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        if line == "leibniz" {
            kind = TableKind::Leibniz;
        } else if let Some(rest) = line.strip_prefix("field") {
            let choice = FieldChoice::parse(rest.trim()).map_err(|m| err(line_no, m))?;
            field = Some(choice);
        } else if let Some(rest) = line.strip_prefix("dim") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(line_no, format!("bad dimension `{}`", rest.trim())))?;
            if n == 0 {
                return Err(err(line_no, "dimension must be positive"));
            }
            dim = Some(n);
        } else if let Some(rest) = line.strip_prefix("basis") {
            let names: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
            if names.is_empty() {
                return Err(err(line_no, "empty basis list"));
            }
            labels = Some(names);
        } else {
            products.push((line_no, line.to_string()));
        }
    }
    let dim = dim.ok_or_else(|| err(0, "missing `dim` header"))?;
    let labels = match labels {
        Some(l) => {
            if l.len() != dim {
                return Err(err(
                    0,
                    format!("basis lists {} names but dim is {dim}", l.len()),
                ));
            }
            l
        }
        None => (0..dim).map(|i| format!("e{i}")).collect(),
    };
    Ok(RawAlgebra {
        field,
        dim,
        labels,
        kind,
        products,
    })
}

fn label_index(labels: &[String], name: &str, line: usize) -> Result<usize, ParseError> {
    labels
        .iter()
        .position(|l| l == name)
        .ok_or_else(|| err(line, format!("unknown basis label `{name}`")))
}

/// Parse a linear combination `2*a + 1/2*b - c` (or `0`) over the basis.
fn parse_combination<K: Field>(
    expr: &str,
    labels: &[String],
    witness: &K,
    line: usize,
) -> Result<Vec<(usize, K)>, ParseError> {
    let expr = expr.trim();
    if expr == "0" {
        return Ok(Vec::new());
    }
    // Split into signed terms.
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut current = String::new();
    for ch in expr.chars() {
        match ch {
            '+' | '-' => {
                if current.trim().is_empty() && terms.is_empty() && ch == '-' {
                    sign = -sign;
                } else if current.trim().is_empty() {
                    return Err(err(line, format!("dangling sign in `{expr}`")));
                } else {
                    terms.push((sign, current.trim().to_string()));
                    current.clear();
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            _ => current.push(ch),
        }
    }
    if current.trim().is_empty() {
        return Err(err(line, format!("trailing operator in `{expr}`")));
    }
    terms.push((sign, current.trim().to_string()));

    let mut out: Vec<(usize, K)> = Vec::new();
    for (sgn, term) in terms {
        let (coeff, name) = match term.split_once('*') {
            Some((c, n)) => {
                let k = K::parse_with(c.trim(), witness).map_err(|m| err(line, m))?;
                (k, n.trim().to_string())
            }
            None => (K::one().promote(witness), term),
        };
        if name == "0" {
            continue;
        }
        let idx = label_index(labels, &name, line)?;
        let signed = if sgn < 0 { -coeff } else { coeff };
        match out.iter_mut().find(|(i, _)| *i == idx) {
            Some((_, v)) => *v = v.clone() + signed,
            None => out.push((idx, signed)),
        }
    }
    Ok(out)
}

fn split_args(inner: &str, expect: usize, line: usize) -> Result<Vec<&str>, ParseError> {
    let parts: Vec<&str> = inner.split(',').map(|s| s.trim()).collect();
    if parts.len() != expect || parts.iter().any(|p| p.is_empty()) {
        return Err(err(
            line,
            format!("expected {expect} comma-separated arguments in `{inner}`"),
        ));
    }
    Ok(parts)
}

/// Second pass: build the algebra over a concrete field.
pub fn build_algebra<K: Field>(raw: &RawAlgebra, witness: &K) -> Result<LYAlgebra<K>, ParseError> {
    match raw.kind {
        TableKind::Ly => build_ly(raw, witness),
        TableKind::Leibniz => build_leibniz(raw, witness),
    }
}

fn build_ly<K: Field>(raw: &RawAlgebra, witness: &K) -> Result<LYAlgebra<K>, ParseError> {
    let mut brackets = Vec::new();
    let mut triples = Vec::new();
    for (line, text) in &raw.products {
        let (lhs, rhs) = text
            .split_once('=')
            .ok_or_else(|| err(*line, format!("expected `= <combination>` in `{text}`")))?;
        let lhs = lhs.trim();
        let combo = parse_combination(rhs, &raw.labels, witness, *line)?;
        if let Some(inner) = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let args = split_args(inner, 2, *line)?;
            let i = label_index(&raw.labels, args[0], *line)?;
            let j = label_index(&raw.labels, args[1], *line)?;
            brackets.push((i, j, combo));
        } else if let Some(inner) = lhs.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            let args = split_args(inner, 3, *line)?;
            let i = label_index(&raw.labels, args[0], *line)?;
            let j = label_index(&raw.labels, args[1], *line)?;
            let k = label_index(&raw.labels, args[2], *line)?;
            triples.push((i, j, k, combo));
        } else {
            return Err(err(
                *line,
                format!("expected `[a,b] = ...` or `{{a,b,c}} = ...`, found `{text}`"),
            ));
        }
    }
    LYAlgebra::from_sparse(witness.clone(), raw.labels.clone(), &brackets, &triples)
        .map_err(algebra_err)
}

fn build_leibniz<K: Field>(raw: &RawAlgebra, witness: &K) -> Result<LYAlgebra<K>, ParseError> {
    let n = raw.dim;
    let mut table = vec![vec![vec![K::zero(); n]; n]; n];
    let mut seen = vec![vec![false; n]; n];
    for (line, text) in &raw.products {
        let (lhs, rhs) = text
            .split_once('=')
            .ok_or_else(|| err(*line, format!("expected `= <combination>` in `{text}`")))?;
        let combo = parse_combination(rhs, &raw.labels, witness, *line)?;
        let (a, b) = lhs
            .split_once('*')
            .ok_or_else(|| err(*line, format!("expected `a * b = ...`, found `{text}`")))?;
        let i = label_index(&raw.labels, a.trim(), *line)?;
        let j = label_index(&raw.labels, b.trim(), *line)?;
        if seen[i][j] {
            return Err(err(
                *line,
                format!("duplicate product for `{}`", lhs.trim()),
            ));
        }
        seen[i][j] = true;
        for (k, v) in combo {
            table[i][j][k] = v;
        }
    }
    LYAlgebra::from_leibniz(witness.clone(), raw.labels.clone(), &table).map_err(algebra_err)
}

fn algebra_err(e: AlgebraError) -> ParseError {
    ParseError {
        line: 0,
        message: e.to_string(),
    }
}

/// Whitespace-separated exact scalars, one row per line.
pub fn parse_matrix<K: Field>(text: &str, witness: &K) -> Result<Matrix<K>, ParseError> {
    let mut rows: Vec<Vec<K>> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.split_once('#') {
            Some((before, _)) => before.trim(),
            None => raw_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            row.push(K::parse_with(tok, witness).map_err(|m| err(line_no, m))?);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(err(line_no, "ragged matrix rows"));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(err(0, "empty matrix file"));
    }
    Ok(Matrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lyat_core::algebra::example_2_9;
    use lyat_core::{Fp, Rat};

    #[test]
    fn parse_example_2_9_file() {
        let text = "\
# two-dimensional example
field Q
dim 2
basis x y
[x,y] = y
{x,y,y} = y
{y,x,x} = 0
";
        let raw = scan_algebra(text).unwrap();
        assert_eq!(raw.dim, 2);
        assert_eq!(raw.field, Some(FieldChoice::Q));
        let alg = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap();
        let reference = example_2_9::<Rat>();
        assert_eq!(alg.bracket_tensor(), reference.bracket_tensor());
        assert_eq!(alg.triple_tensor(), reference.triple_tensor());
    }

    #[test]
    fn empty_product_list_gives_abelian() {
        let text = "dim 3\n";
        let raw = scan_algebra(text).unwrap();
        let alg = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(alg.derived_algebra().is_zero());
        assert!(alg.check_axioms().all_pass());
    }

    #[test]
    fn self_bracket_rejected() {
        let text = "dim 2\nbasis a b\n[a,a] = b\n";
        let raw = scan_algebra(text).unwrap();
        let e = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap_err();
        assert!(e.message.contains("skew"), "{e}");
    }

    #[test]
    fn duplicate_conflicting_entries_rejected() {
        let text = "dim 2\nbasis a b\n[a,b] = a\n[b,a] = a\n";
        let raw = scan_algebra(text).unwrap();
        let e = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap_err();
        assert!(e.message.contains("duplicate"), "{e}");
    }

    #[test]
    fn coefficients_and_sums() {
        let text = "dim 3\nbasis a b c\n[a,b] = 2*c - 1/2*a\n";
        let raw = scan_algebra(text).unwrap();
        let alg = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap();
        let v = alg.bracket_basis(0, 1);
        assert_eq!(v[0], Rat::new(-1, 2));
        assert_eq!(v[2], Rat::from_int(2));
        // Antisymmetrized partner.
        let w = alg.bracket_basis(1, 0);
        assert_eq!(w[2], Rat::from_int(-2));
    }

    #[test]
    fn syntax_error_carries_line_number() {
        let text = "dim 2\nbasis a b\n[a,b) = a\n";
        let raw = scan_algebra(text).unwrap();
        let e = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn leibniz_file() {
        let text = "\
leibniz
field Q
dim 2
basis a b
a * a = b
";
        let raw = scan_algebra(text).unwrap();
        assert_eq!(raw.kind, TableKind::Leibniz);
        let alg = build_algebra::<Rat>(&raw, &Rat::from_int(1)).unwrap();
        assert!(alg.check_axioms().all_pass());
    }

    #[test]
    fn fp_field_header() {
        let text = "field Fp 7\ndim 2\nbasis a b\n[a,b] = 3*b\n";
        let raw = scan_algebra(text).unwrap();
        assert_eq!(raw.field, Some(FieldChoice::Fp(7)));
        let alg = build_algebra::<Fp>(&raw, &Fp::new(1, 7)).unwrap();
        assert_eq!(alg.bracket_basis(0, 1)[1], Fp::new(3, 7));
    }

    #[test]
    fn field_choice_validation() {
        assert!(FieldChoice::parse("Q").is_ok());
        assert!(FieldChoice::parse("Fp:7").is_ok());
        assert!(FieldChoice::parse("Fp:6").is_err());
        assert!(FieldChoice::parse("Fp:2").is_err());
        assert!(FieldChoice::parse("Fp:3").is_err());
        assert!(FieldChoice::parse("R").is_err());
    }

    #[test]
    fn matrix_file() {
        let text = "1 1/2\n0 -3\n";
        let m = parse_matrix::<Rat>(text, &Rat::from_int(1)).unwrap();
        assert_eq!(m[(0, 1)], Rat::new(1, 2));
        assert_eq!(m[(1, 1)], Rat::from_int(-3));
        assert!(parse_matrix::<Rat>("1 2\n3\n", &Rat::from_int(1)).is_err());
    }
}
