//! Independent Hochschild cohomology oracle on the full bar cochain
//! complex: `C^n = Lin(A^{(x)n}, A)` with the standard differential. Used
//! to cross-validate the enveloping-algebra route; the two computations
//! share no code path beyond scalar arithmetic.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// Work cap: the differential matrix `delta^n` may have at most this many
/// entries. `dim <= 4` algebras pass for `n <= 4`, `dim 2` up to `n <= 7`.
pub const DEFAULT_BAR_BUDGET: usize = 1 << 23;

/// `dim HH^n(A)` from the bar complex: `dim ker(delta^n) - rank(delta^{n-1})`.
pub fn bar_cochain_oracle(alg: &Algebra, n: usize, budget: Option<usize>) -> Result<usize> {
    let budget = budget.unwrap_or(DEFAULT_BAR_BUDGET);
    let d = alg.dim();
    let dims = |k: usize| -> usize { d.pow(k as u32 + 1) }; // dim C^k = d^k * d
    let worst = dims(n).saturating_mul(dims(n + 1));
    if worst > budget {
        return Err(Error::CapExceeded { degree: n, cap: budget });
    }
    let c_n = dims(n);
    let rank_n = rank_delta(alg, n);
    let rank_prev = if n == 0 { 0 } else { rank_delta(alg, n - 1) };
    Ok(c_n - rank_n - rank_prev)
}

/// Rank of `delta^k : C^k -> C^{k+1}`.
fn rank_delta(alg: &Algebra, k: usize) -> usize {
    let d = alg.dim();
    let rows = d.pow(k as u32 + 2);
    let cols = d.pow(k as u32 + 1);
    match alg.field {
        Field::Prime(p) => {
            let mut data = vec![0u64; rows * cols];
            fill_delta(alg, k, |r, c, v| {
                let cell = &mut data[r * cols + c];
                *cell = (*cell + v.as_fp()) % p;
            });
            crate::linalg::rank_fp_in_place(&mut data, rows, cols, p)
        }
        Field::Rationals => {
            let f = alg.field;
            let mut m = Matrix::zeros(f, rows, cols);
            fill_delta(alg, k, |r, c, v| {
                let old = m.get(r, c);
                m.set(r, c, f.add(&old, &v.0));
            });
            m.rank()
        }
    }
}

struct Val(crate::linalg::Scalar);

impl Val {
    fn as_fp(&self) -> u64 {
        match &self.0 {
            crate::linalg::Scalar::Fp(v) => *v,
            _ => unreachable!(),
        }
    }
}

/// Emit the entries of `delta^k`. Row indices encode an output tuple of
/// `k+1` basis elements (big-endian) and a value coordinate; columns encode
/// the input cochain `E_{t, s}` the same way.
fn fill_delta(alg: &Algebra, k: usize, mut emit: impl FnMut(usize, usize, Val)) {
    let f = alg.field;
    let d = alg.dim();
    let tuple_count = d.pow(k as u32);
    // decode/encode helpers for big-endian base-d tuples
    let decode = |mut idx: usize, len: usize| -> Vec<usize> {
        let mut t = vec![0usize; len];
        for slot in (0..len).rev() {
            t[slot] = idx % d;
            idx /= d;
        }
        t
    };
    let encode = |t: &[usize]| -> usize { t.iter().fold(0usize, |acc, &x| acc * d + x) };

    for t_idx in 0..tuple_count {
        let t = decode(t_idx, k);
        for s in 0..d {
            let col = t_idx * d + s;
            // term 0: a1 . f(a2..a_{k+1}) over all a1 = u
            for u in 0..d {
                let mut out_tuple = Vec::with_capacity(k + 1);
                out_tuple.push(u);
                out_tuple.extend_from_slice(&t);
                let row_base = encode(&out_tuple) * d;
                for (r, c) in alg.mul_basis(u, s) {
                    emit(row_base + r, col, Val(c.clone()));
                }
            }
            // terms i = 1..=k: (-1)^i f(.., a_i a_{i+1}, ..)
            for i in 1..=k {
                let sign_neg = i % 2 == 1;
                for u in 0..d {
                    for v in 0..d {
                        // product u*v must hit t[i-1]
                        for (r, c) in alg.mul_basis(u, v) {
                            if *r != t[i - 1] {
                                continue;
                            }
                            let mut out_tuple = Vec::with_capacity(k + 1);
                            out_tuple.extend_from_slice(&t[..i - 1]);
                            out_tuple.push(u);
                            out_tuple.push(v);
                            out_tuple.extend_from_slice(&t[i..]);
                            let row = encode(&out_tuple) * d + s;
                            let val = if sign_neg { f.neg(c) } else { c.clone() };
                            emit(row, col, Val(val));
                        }
                    }
                }
            }
            // term k+1: (-1)^{k+1} f(a1..a_k) . a_{k+1}
            let sign_neg = (k + 1) % 2 == 1;
            for w in 0..d {
                let mut out_tuple = Vec::with_capacity(k + 1);
                out_tuple.extend_from_slice(&t);
                out_tuple.push(w);
                let row_base = encode(&out_tuple) * d;
                for (r, c) in alg.mul_basis(s, w) {
                    let val = if sign_neg { f.neg(c) } else { c.clone() };
                    emit(row_base + r, col, Val(val));
                }
            }
        }
    }
}
