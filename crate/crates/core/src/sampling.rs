//! Seeded random generation: matrices, nonsingular maps, and random
//! LY-algebras obtained by conjugating a catalog of left Leibniz product
//! tables by random basis changes (conjugation preserves the Leibniz
//! identity, so every sample feeds the skew-symmetrization construction).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{LYAlgebra, Tensor3};
use crate::field::Field;
use crate::matrix::Matrix;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense matrix with entries drawn uniformly from [lo, hi] and stamped
/// into the witness's field.
pub fn random_matrix<K: Field, R: Rng>(
    rng: &mut R,
    n: usize,
    witness: &K,
    lo: i64,
    hi: i64,
) -> Matrix<K> {
    Matrix::from_fn(n, n, |_, _| {
        K::from_int(rng.gen_range(lo..=hi)).promote(witness)
    })
}

/// Rejection-sample a nonsingular matrix with small integer entries.
pub fn random_invertible<K: Field, R: Rng>(rng: &mut R, n: usize, witness: &K) -> Matrix<K> {
    loop {
        let m = random_matrix(rng, n, witness, -2, 2);
        if m.rank() == n {
            return m;
        }
    }
}

fn table_from_entries<K: Field>(n: usize, entries: &[(usize, usize, usize, i64)]) -> Tensor3<K> {
    let mut t = vec![vec![vec![K::zero(); n]; n]; n];
    for &(i, j, k, v) in entries {
        t[i][j][k] = K::from_int(v);
    }
    t
}

/// Direct sum of two product tables.
fn direct_sum<K: Field>(a: &Tensor3<K>, b: &Tensor3<K>) -> Tensor3<K> {
    let na = a.len();
    let nb = b.len();
    let n = na + nb;
    let mut t = vec![vec![vec![K::zero(); n]; n]; n];
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                t[i][j][k] = a[i][j][k].clone();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                t[na + i][na + j][na + k] = b[i][j][k].clone();
            }
        }
    }
    t
}

/// Base change x ∘ y = g⁻¹(g(x)·g(y)); Leibniz identities transport along it.
fn conjugate_table<K: Field>(t: &Tensor3<K>, g: &Matrix<K>) -> Tensor3<K> {
    let n = t.len();
    let ginv = g.inverse().expect("conjugator must be invertible");
    let mut out = vec![vec![vec![K::zero(); n]; n]; n];
    for i in 0..n {
        let gi = g.apply(&crate::matrix::unit_vector(n, i));
        for j in 0..n {
            let gj = g.apply(&crate::matrix::unit_vector(n, j));
            // (g e_i) · (g e_j) through the original table.
            let mut prod = vec![K::zero(); n];
            for (a, ga) in gi.iter().enumerate() {
                if ga.is_zero() {
                    continue;
                }
                for (b, gb) in gj.iter().enumerate() {
                    if gb.is_zero() {
                        continue;
                    }
                    let co = ga.clone() * gb.clone();
                    for k in 0..n {
                        if !t[a][b][k].is_zero() {
                            prod[k] = prod[k].clone() + co.clone() * t[a][b][k].clone();
                        }
                    }
                }
            }
            out[i][j] = ginv.apply(&prod);
        }
    }
    out
}

/// The seed families of left Leibniz product tables.
fn leibniz_families<K: Field>() -> Vec<(String, Tensor3<K>)> {
    let mut fams: Vec<(String, Tensor3<K>)> = Vec::new();
    fams.push(("abelian2".into(), table_from_entries(2, &[])));
    fams.push(("abelian3".into(), table_from_entries(3, &[])));
    // e0·e0 = e1: nilpotent, not a Lie algebra.
    fams.push(("square2".into(), table_from_entries(2, &[(0, 0, 1, 1)])));
    // e0·e0 = e1, e0·e1 = e2: three-dimensional nilpotent Leibniz chain.
    fams.push((
        "chain3".into(),
        table_from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1)]),
    ));
    // Solvable 2-dimensional Lie algebra [e0, e1] = e1.
    fams.push((
        "solv2".into(),
        table_from_entries(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
    ));
    // Heisenberg [e0, e1] = e2.
    fams.push((
        "heis3".into(),
        table_from_entries(3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
    ));
    // sl2 with e=0, f=1, h=2.
    fams.push((
        "sl2".into(),
        table_from_entries(
            3,
            &[
                (2, 0, 0, 2),
                (0, 2, 0, -2),
                (2, 1, 1, -2),
                (1, 2, 1, 2),
                (0, 1, 2, 1),
                (1, 0, 2, -1),
            ],
        ),
    ));
    // Sums with an abelian line give nontrivial centroids.
    let solv2: Tensor3<K> = table_from_entries(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
    let square2: Tensor3<K> = table_from_entries(2, &[(0, 0, 1, 1)]);
    let ab1: Tensor3<K> = table_from_entries(1, &[]);
    fams.push(("solv2+line".into(), direct_sum(&solv2, &ab1)));
    fams.push(("square2+line".into(), direct_sum(&square2, &ab1)));
    fams.push(("square2+solv2".into(), direct_sum(&square2, &solv2)));
    fams
}

/// One random LY-algebra: pick a Leibniz family, conjugate its table by a
/// random invertible basis change, and skew-symmetrize. The construction
/// checks the Leibniz identity and the result always passes the axiom
/// checker; both are debug-asserted here and re-verified by tests.
pub fn random_ly_algebra<K: Field, R: Rng>(rng: &mut R, witness: &K) -> (String, LYAlgebra<K>) {
    let fams = leibniz_families::<K>();
    let (name, table) = &fams[rng.gen_range(0..fams.len())];
    let n = table.len();
    let g = random_invertible(rng, n, witness);
    let conj = conjugate_table(table, &g);
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    let alg = LYAlgebra::from_leibniz(witness.clone(), labels, &conj)
        .expect("conjugation preserves the Leibniz identity");
    (name.clone(), alg)
}
