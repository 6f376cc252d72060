//! Dense Gauss-Jordan elimination over `F_p` with lazy reduction.
//!
//! Entries are kept as unreduced `u64` accumulators between pivot steps;
//! a row update adds `(p - f) * pivot_row[j]` without a modulo in the inner
//! loop. With `p < 2^20` and at most `2^16` pivot steps the accumulators
//! stay below `2^56`, so nothing overflows. The per-row updates are
//! independent, which is what the optional rayon path exploits.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Row-count threshold below which the parallel path is not worth it.
#[cfg(feature = "parallel")]
const PAR_MIN_CELLS: usize = 1 << 15;

pub fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on i128 to dodge sign fiddling
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert!(r0 == 1, "element not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

pub struct Echelon {
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form, in place. Returns rank and pivot columns.
pub fn rref_in_place(data: &mut [u64], rows: usize, cols: usize, p: u64) -> Echelon {
    #[cfg(feature = "parallel")]
    {
        if rows * cols >= PAR_MIN_CELLS {
            return rref_par(data, rows, cols, p);
        }
    }
    rref_seq(data, rows, cols, p)
}

pub fn rref_seq(data: &mut [u64], rows: usize, cols: usize, p: u64) -> Echelon {
    debug_assert_eq!(data.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = find_pivot(data, rows, cols, p, r, col) else { continue };
        if pr != r {
            swap_rows(data, cols, pr, r);
        }
        normalize_row(&mut data[r * cols..(r + 1) * cols], col, p);
        let (pivot_row, rest) = split_pivot(data, cols, r);
        for (i, row) in rest {
            let _ = i;
            eliminate(row, pivot_row, col, p);
        }
        pivots.push(col);
        r += 1;
    }
    finish(data, p);
    Echelon { rank: pivots.len(), pivots }
}

#[cfg(feature = "parallel")]
pub fn rref_par(data: &mut [u64], rows: usize, cols: usize, p: u64) -> Echelon {
    debug_assert_eq!(data.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    let mut scratch = vec![0u64; cols];
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = find_pivot(data, rows, cols, p, r, col) else { continue };
        if pr != r {
            swap_rows(data, cols, pr, r);
        }
        normalize_row(&mut data[r * cols..(r + 1) * cols], col, p);
        scratch.copy_from_slice(&data[r * cols..(r + 1) * cols]);
        let pivot_row = &scratch;
        data.par_chunks_mut(cols).enumerate().for_each(|(i, row)| {
            if i != r {
                eliminate(row, pivot_row, col, p);
            }
        });
        pivots.push(col);
        r += 1;
    }
    finish(data, p);
    Echelon { rank: pivots.len(), pivots }
}

/// Rank only: forward elimination, no back-substitution, row-parallel when
/// the `parallel` feature is on and the matrix is large.
pub fn rank_in_place(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    #[cfg(feature = "parallel")]
    {
        if rows * cols >= PAR_MIN_CELLS {
            return rank_par(data, rows, cols, p);
        }
    }
    rank_seq(data, rows, cols, p)
}

pub fn rank_seq(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = find_pivot(data, rows, cols, p, r, col) else { continue };
        if pr != r {
            swap_rows(data, cols, pr, r);
        }
        normalize_row(&mut data[r * cols..(r + 1) * cols], col, p);
        let (_, rest) = data.split_at_mut(r * cols);
        let (pivot_row, below) = rest.split_at_mut(cols);
        for row in below.chunks_mut(cols) {
            eliminate(row, pivot_row, col, p);
        }
        r += 1;
    }
    r
}

#[cfg(feature = "parallel")]
pub fn rank_par(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0usize;
    let mut scratch = vec![0u64; cols];
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = find_pivot(data, rows, cols, p, r, col) else { continue };
        if pr != r {
            swap_rows(data, cols, pr, r);
        }
        normalize_row(&mut data[r * cols..(r + 1) * cols], col, p);
        scratch.copy_from_slice(&data[r * cols..(r + 1) * cols]);
        let pivot_row = &scratch;
        data[(r + 1) * cols..].par_chunks_mut(cols).for_each(|row| {
            eliminate(row, pivot_row, col, p);
        });
        r += 1;
    }
    r
}

fn find_pivot(data: &mut [u64], rows: usize, cols: usize, p: u64, from: usize, col: usize) -> Option<usize> {
    for i in from..rows {
        let v = data[i * cols + col] % p;
        data[i * cols + col] = v;
        if v != 0 {
            return Some(i);
        }
    }
    None
}

fn swap_rows(data: &mut [u64], cols: usize, a: usize, b: usize) {
    let (lo, hi) = (a.min(b), a.max(b));
    let (first, second) = data.split_at_mut(hi * cols);
    first[lo * cols..(lo + 1) * cols].swap_with_slice(&mut second[..cols]);
}

/// Fully reduce a row mod p and scale so the entry at `col` becomes 1.
fn normalize_row(row: &mut [u64], col: usize, p: u64) {
    for v in row.iter_mut() {
        *v %= p;
    }
    let inv = inv_mod(row[col], p);
    for v in row.iter_mut() {
        *v = *v * inv % p;
    }
}

#[inline]
fn eliminate(row: &mut [u64], pivot_row: &[u64], col: usize, p: u64) {
    let f = row[col] % p;
    if f == 0 {
        row[col] = 0;
        return;
    }
    let m = p - f;
    for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
        *x += m * pv;
    }
}

fn split_pivot(data: &mut [u64], cols: usize, r: usize) -> (&[u64], Vec<(usize, &mut [u64])>) {
    // Safety-free split: copy would be simpler but this avoids an alloc in
    // the hot sequential path by splitting around the pivot row.
    let (before, rest) = data.split_at_mut(r * cols);
    let (pivot, after) = rest.split_at_mut(cols);
    let mut others: Vec<(usize, &mut [u64])> = Vec::new();
    for (i, row) in before.chunks_mut(cols).enumerate() {
        others.push((i, row));
    }
    for (i, row) in after.chunks_mut(cols).enumerate() {
        others.push((r + 1 + i, row));
    }
    (pivot, others)
}

fn finish(data: &mut [u64], p: u64) {
    for v in data.iter_mut() {
        *v %= p;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_small_primes() {
        for p in [2u64, 3, 101, 65537_u64.min(super::super::field::MAX_PRIME - 1)] {
            if !(2..super::super::field::MAX_PRIME).contains(&p) {
                continue;
            }
            for a in 1..p.min(50) {
                assert_eq!(a * inv_mod(a, p) % p, 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn rref_identity_fixed_point() {
        let mut m = vec![1, 0, 0, 1];
        let e = rref_seq(&mut m, 2, 2, 101);
        assert_eq!(e.rank, 2);
        assert_eq!(m, vec![1, 0, 0, 1]);
    }

    #[test]
    fn seq_and_par_agree() {
        let p = 101;
        let mut rng = crate::rng::Rng::new(7);
        for _ in 0..10 {
            let rows = 1 + rng.below(40) as usize;
            let cols = 1 + rng.below(40) as usize;
            let data: Vec<u64> = (0..rows * cols).map(|_| rng.below(p)).collect();
            let mut a = data.clone();
            let ea = rref_seq(&mut a, rows, cols, p);
            #[cfg(feature = "parallel")]
            {
                let mut b = data.clone();
                let eb = rref_par(&mut b, rows, cols, p);
                assert_eq!(a, b);
                assert_eq!(ea.pivots, eb.pivots);
            }
            let _ = ea;
        }
    }
}
