//! Univariate polynomials over an exact field; minimal polynomials of
//! square matrices computed by finding the first linear dependence among
//! the flattened powers.

use std::fmt;

use crate::field::Field;
use crate::matrix::{Echelon, Matrix};

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<K> {
    /// Coefficients, low degree first; leading coefficient nonzero unless
    /// this is the zero polynomial (empty coefficient list).
    coeffs: Vec<K>,
}

impl<K: Field> Polynomial<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix<K>) -> Matrix<K> {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c.clone();
            }
        }
        acc
    }

    /// Multiplicity of the root 0, i.e. the largest k with X^k dividing self.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            // Pull a leading minus into the separator.
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "X")?,
                1 => write!(f, "{mag}*X")?,
                _ if unit => write!(f, "X^{i}")?,
                _ => write!(f, "{mag}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic least-degree polynomial annihilating `m`.
///
/// Powers of `m` are flattened and fed to an incremental reducer; the first
/// power that is dependent on its predecessors yields the (unique) monic
/// relation of least degree.
pub fn minimal_polynomial<K: Field>(m: &Matrix<K>) -> Polynomial<K> {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Polynomial::new(vec![K::one()]);
    }
    let mut powers: Vec<Matrix<K>> = vec![Matrix::identity(n)];
    let mut ech = Echelon::new(n * n);
    ech.insert(powers[0].flatten());
    loop {
        let next = powers.last().unwrap().mul(m);
        if !ech.insert(next.flatten()) {
            // next = sum of earlier powers: solve for the coefficients.
            let k = powers.len();
            let system = Matrix::from_fn(n * n, k, |r, c| powers[c].flatten()[r].clone());
            let coeffs = system
                .solve(&next.flatten())
                .expect("dependent power must be expressible");
            let mut poly = vec![K::zero(); k + 1];
            for (i, c) in coeffs.into_iter().enumerate() {
                poly[i] = -c;
            }
            poly[k] = K::one();
            let p = Polynomial::new(poly);
            debug_assert!(p.eval_matrix(m).is_zero());
            return p;
        }
        powers.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    #[test]
    fn minpoly_zero_matrix() {
        let m = Matrix::<Rat>::zeros(2, 2);
        let p = minimal_polynomial(&m);
        // X
        assert_eq!(p.coeffs(), &[Rat::from_int(0), Rat::from_int(1)]);
        assert_eq!(p.order_at_zero(), 1);
    }

    #[test]
    fn minpoly_identity() {
        let m = Matrix::<Rat>::identity(3);
        let p = minimal_polynomial(&m);
        // X - 1
        assert_eq!(p.coeffs(), &[Rat::from_int(-1), Rat::from_int(1)]);
    }

    #[test]
    fn minpoly_nilpotent_block() {
        let m = Matrix::<Rat>::from_int_rows(&[&[0, 1], &[0, 0]]);
        let p = minimal_polynomial(&m);
        // X^2: X does not annihilate, X^2 does.
        assert_eq!(
            p.coeffs(),
            &[Rat::from_int(0), Rat::from_int(0), Rat::from_int(1)]
        );
        assert!(p.eval_matrix(&m).is_zero());
        assert!(!m.is_zero());
        assert_eq!(p.order_at_zero(), 2);
    }

    #[test]
    fn minpoly_annihilates_and_is_minimal() {
        let m = Matrix::<Rat>::from_int_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 5]]);
        let p = minimal_polynomial(&m);
        assert!(p.eval_matrix(&m).is_zero());
        assert!(p.is_monic());
        // (X-2)^2 (X-5) has degree 3; no proper monic divisor annihilates.
        assert_eq!(p.degree(), Some(3));
    }
}
