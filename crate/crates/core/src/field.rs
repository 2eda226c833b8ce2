//! Exact scalar arithmetic: the `Field` trait and its three instances,
//! arbitrary-precision rationals, machine rationals over `i128`, and prime
//! fields with a runtime modulus.
//!
//! Everything downstream is generic over `Field`; no floating point exists in
//! this crate and every comparison is exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Arbitrary-precision rational; slow but unbounded.
pub type BigRat = Ratio<BigInt>;
/// Machine rational over `i128`; overflow panics instead of wrapping
/// (overflow-checks are enabled workspace-wide).
pub type Rat = Ratio<i128>;

/// An exact field scalar.
///
/// Implementations must keep values in canonical form so that `PartialEq`
/// is literal equality: rationals in lowest terms with positive denominator
/// (both `Ratio` instances guarantee this), prime-field residues in `[0, p)`.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Lift of a small integer. For prime fields the result is an
    /// unreduced literal until it meets a value carrying the modulus;
    /// call [`Field::promote`] to stamp it eagerly.
    fn from_int(k: i64) -> Self;

    /// Characteristic of the field this value belongs to (0 for ℚ).
    fn characteristic(&self) -> u64;

    /// Adopt the field parameters of `witness` (the modulus, for 𝔽_p);
    /// identity on ℚ.
    fn promote(&self, witness: &Self) -> Self;

    /// Parse an exact scalar (`a` or `a/b`) in the field of `witness`.
    fn parse_with(s: &str, witness: &Self) -> Result<Self, String>;

    /// Human-readable field name, e.g. `Q` or `F_7`.
    fn field_label(&self) -> String;
}

fn parse_ratio<T>(s: &str) -> Result<Ratio<T>, String>
where
    T: Clone + num_integer::Integer + std::str::FromStr,
{
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let n: T = num.parse().map_err(|_| format!("bad numerator `{num}`"))?;
    let d: T = match den {
        Some(d) => d.parse().map_err(|_| format!("bad denominator `{d}`"))?,
        None => T::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Ratio::new(n, d))
}

impl Field for Rat {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_int(k: i64) -> Self {
        Ratio::from_integer(k as i128)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn promote(&self, _witness: &Self) -> Self {
        *self
    }

    fn parse_with(s: &str, _witness: &Self) -> Result<Self, String> {
        parse_ratio(s)
    }

    fn field_label(&self) -> String {
        "Q".into()
    }
}

impl Field for BigRat {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_int(k: i64) -> Self {
        Ratio::from_integer(BigInt::from(k))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn promote(&self, _witness: &Self) -> Self {
        self.clone()
    }

    fn parse_with(s: &str, _witness: &Self) -> Result<Self, String> {
        parse_ratio(s)
    }

    fn field_label(&self) -> String {
        "Q".into()
    }
}

/// Element of 𝔽_p with the modulus carried alongside the residue.
///
/// `p == 0` marks an integer literal (the image of ℤ before a modulus is
/// known); such values only ever come from `zero()`, `one()` and
/// `from_int`, and are folded into `[0, p)` the first time they interact
/// with a value that knows its modulus. Mixing two distinct nonzero
/// moduli is a programming error and panics.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    v: i128,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        Fp {
            v: (v as i128).rem_euclid(p as i128),
            p,
        }
    }

    /// Canonical representative in `[0, p)`, or the raw literal when the
    /// modulus is still unknown.
    pub fn residue(&self) -> i128 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn unified(self, other: Fp) -> (i128, i128, u64) {
        let p = match (self.p, other.p) {
            (0, q) => q,
            (q, 0) => q,
            (q, r) if q == r => q,
            (q, r) => panic!("mixed moduli {q} and {r}"),
        };
        if p == 0 {
            (self.v, other.v, 0)
        } else {
            (
                self.v.rem_euclid(p as i128),
                other.v.rem_euclid(p as i128),
                p,
            )
        }
    }

    fn make(v: i128, p: u64) -> Self {
        if p == 0 {
            Fp { v, p }
        } else {
            Fp {
                v: v.rem_euclid(p as i128),
                p,
            }
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.unified(*other);
        a == b
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = self.unified(rhs);
        Fp::make(a + b, p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let (a, b, p) = self.unified(rhs);
        Fp::make(a - b, p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = self.unified(rhs);
        Fp::make(a * b, p)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::make(-self.v, self.p)
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        let (a, b, p) = self.unified(rhs);
        assert!(b != 0, "division by zero");
        if p == 0 {
            // Both sides are integer literals; only exact divisions occur.
            assert!(a % b == 0, "inexact literal division {a}/{b}");
            Fp::make(a / b, 0)
        } else {
            Fp::make(a, p) * Fp::make(b, p).inv()
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
}

/// Extended Euclid over i128; returns (g, x, y) with a·x + b·y = g.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero");
        if self.p == 0 {
            assert!(
                self.v == 1 || self.v == -1,
                "cannot invert literal {} without a modulus",
                self.v
            );
            return *self;
        }
        let (g, x, _) = egcd(self.v, self.p as i128);
        debug_assert!(g == 1);
        Fp::make(x, self.p)
    }

    fn from_int(k: i64) -> Self {
        Fp { v: k as i128, p: 0 }
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn promote(&self, witness: &Self) -> Self {
        let (v, _, p) = self.unified(*witness);
        Fp::make(v, p)
    }

    fn parse_with(s: &str, witness: &Self) -> Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let n: i64 = num.parse().map_err(|_| format!("bad numerator `{num}`"))?;
        let nume = Fp::from_int(n).promote(witness);
        match den {
            None => Ok(nume),
            Some(d) => {
                let d: i64 = d.parse().map_err(|_| format!("bad denominator `{d}`"))?;
                let den = Fp::from_int(d).promote(witness);
                if den.is_zero() {
                    return Err(format!(
                        "denominator `{d}` is zero in {}",
                        witness.field_label()
                    ));
                }
                Ok(nume / den)
            }
        }
    }

    fn field_label(&self) -> String {
        format!("F_{}", self.p)
    }
}

/// Deterministic Miller-Rabin for u64 (base set exact for the full range).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat::new(1, 2));
        let b = Rat::new(3, -6);
        assert_eq!(b, Rat::new(-1, 2));
        assert_eq!(format!("{b}"), "-1/2");
        assert_eq!(<Rat as Field>::from_int(5) * Rat::new(1, 5), Rat::one());
    }

    #[test]
    fn rational_parse() {
        let w = Rat::one();
        assert_eq!(Rat::parse_with("3/4", &w).unwrap(), Rat::new(3, 4));
        assert_eq!(Rat::parse_with("-2", &w).unwrap(), Rat::new(-2, 1));
        assert!(Rat::parse_with("1/0", &w).is_err());
        assert!(Rat::parse_with("x", &w).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let w = Fp::new(1, 7);
        let a = Fp::new(3, 7);
        let b = Fp::new(5, 7);
        assert_eq!(a + b, Fp::new(1, 7));
        assert_eq!(a * b, Fp::new(1, 7));
        assert_eq!(a.inv(), Fp::new(5, 7));
        assert_eq!(-a, Fp::new(4, 7));
        // Literals fold into the modulus on contact.
        assert_eq!(Fp::from_int(10) + w, Fp::new(4, 7));
        assert_eq!(Fp::from_int(-1).promote(&w), Fp::new(6, 7));
        assert_eq!(Fp::parse_with("1/2", &w).unwrap(), Fp::new(4, 7));
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn fp_mixed_moduli_panics() {
        let _ = Fp::new(1, 5) + Fp::new(1, 7);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert!(!is_prime(1_000_000_001));
    }
}
