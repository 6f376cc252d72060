//! Univariate polynomial arithmetic and factorization over prime fields.
//!
//! Used by the exact endomorphism-algebra analysis: minimal polynomials of
//! endomorphisms are split into coprime factors to manufacture idempotents.
//! Sizes are tiny (degree bounded by module dimension), so everything is
//! quadratic and dense. Cantor-Zassenhaus is Las Vegas: the seeded retries
//! only affect runtime, never the answer.

use num::bigint::BigUint;
use num::One;

use super::fp::inv_mod;
use crate::rng::Rng;

/// Coefficients low-to-high, no trailing zeros, over `F_p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl Poly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Poly {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { p, c }
    }

    pub fn zero(p: u64) -> Poly {
        Poly { p, c: vec![] }
    }

    pub fn one(p: u64) -> Poly {
        Poly { p, c: vec![1] }
    }

    pub fn x(p: u64) -> Poly {
        Poly { p, c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.c.len() - 1
    }

    pub fn lead(&self) -> u64 {
        *self.c.last().expect("lead of zero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p);
        Poly::new(self.p, self.c.iter().map(|&x| x * inv % self.p).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![0u64; n];
        for (i, x) in c.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            *x = (a + b) % self.p;
        }
        Poly::new(self.p, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![0u64; n];
        for (i, x) in c.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            *x = (a + self.p - b) % self.p;
        }
        Poly::new(self.p, c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let mut c = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        Poly::new(self.p, c)
    }

    /// Remainder of self modulo a nonzero divisor.
    pub fn rem(&self, m: &Poly) -> Poly {
        assert!(!m.is_zero());
        let p = self.p;
        let mut r = self.c.clone();
        let dm = m.deg();
        let lead_inv = inv_mod(m.lead(), p);
        while r.len() > dm {
            let k = r.len() - 1;
            let f = r[k] % p * lead_inv % p;
            if f != 0 {
                let shift = k - dm;
                for (j, &mc) in m.c.iter().enumerate() {
                    r[shift + j] = (r[shift + j] + p * p - f * mc % p * 1) % p;
                    // (x + p^2 - y) keeps the subtraction in range
                }
            }
            r.pop();
        }
        Poly::new(p, r)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero(self.p);
        }
        let c = self.c.iter().enumerate().skip(1).map(|(i, &x)| (i as u64 % self.p) * x % self.p).collect();
        Poly::new(self.p, c)
    }

    /// self^e mod m, with a big exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.p);
        for bit in e.to_radix_le(2) {
            if bit == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.c.iter().rev() {
            acc = (acc * x + c) % self.p;
        }
        acc
    }
}

/// Full monic factorization into irreducibles with multiplicities.
pub fn factor(f: &Poly, rng: &mut Rng) -> Vec<(Poly, usize)> {
    let mut out: Vec<(Poly, usize)> = Vec::new();
    square_free_split(&f.monic(), 1, &mut out, rng);
    out.sort_by(|a, b| (a.0.c.len(), &a.0.c).cmp(&(b.0.c.len(), &b.0.c)));
    out
}

fn square_free_split(f: &Poly, mult: usize, out: &mut Vec<(Poly, usize)>, rng: &mut Rng) {
    if f.is_zero() || f.deg() == 0 {
        return;
    }
    let p = f.p;
    let d = f.derivative();
    if d.is_zero() {
        // f = g(x^p); over the prime field the p-th root just reindexes
        // coefficients (Frobenius is the identity on F_p).
        let mut c = Vec::new();
        for (i, &x) in f.c.iter().enumerate() {
            if i % (p as usize) == 0 {
                c.push(x);
            } else {
                debug_assert_eq!(x, 0);
            }
        }
        square_free_split(&Poly::new(p, c), mult * p as usize, out, rng);
        return;
    }
    let g = f.gcd(&d);
    if g.deg() == 0 {
        for (q, m) in distinct_degree(f, rng) {
            merge(out, q, m * mult);
        }
        return;
    }
    // f = g * (f/g) with f/g squarefree-ish; recurse on both parts
    let quot = divide_exact(f, &g);
    for (q, m) in distinct_degree(&quot, rng) {
        merge(out, q, m * mult);
    }
    // remove the part already accounted for from g
    let mut rest = g;
    loop {
        let mut changed = false;
        for (q, _) in out.clone() {
            while !rest.is_zero() && rest.deg() >= q.deg() && rest.rem(&q).is_zero() {
                rest = divide_exact(&rest, &q);
                bump(out, &q, mult);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if !rest.is_zero() && rest.deg() > 0 {
        square_free_split(&rest, mult, out, rng);
    }
}

fn merge(out: &mut Vec<(Poly, usize)>, q: Poly, m: usize) {
    for (f, mm) in out.iter_mut() {
        if *f == q {
            *mm += m;
            return;
        }
    }
    out.push((q, m));
}

fn bump(out: &mut Vec<(Poly, usize)>, q: &Poly, m: usize) {
    for (f, mm) in out.iter_mut() {
        if f == q {
            *mm += m;
            return;
        }
    }
    out.push((q.clone(), m));
}

fn divide_exact(f: &Poly, g: &Poly) -> Poly {
    // quotient of an exact division
    let p = f.p;
    let mut r = f.c.clone();
    let dg = g.deg();
    let lead_inv = inv_mod(g.lead(), p);
    let mut q = vec![0u64; f.c.len().saturating_sub(dg)];
    while r.len() > dg {
        let k = r.len() - 1;
        let c = r[k] * lead_inv % p;
        q[k - dg] = c;
        if c != 0 {
            for (j, &gc) in g.c.iter().enumerate() {
                let idx = k - dg + j;
                r[idx] = (r[idx] + p * p - c * gc % p) % p;
            }
        }
        r.pop();
    }
    debug_assert!(Poly::new(p, r).is_zero(), "division was not exact");
    Poly::new(p, q)
}

/// Distinct-degree then equal-degree factorization of a squarefree monic f.
fn distinct_degree(f: &Poly, rng: &mut Rng) -> Vec<(Poly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut xq = Poly::x(p); // will hold x^{p^d} mod rest
    let mut d = 0usize;
    while !rest.is_zero() && rest.deg() > 0 {
        d += 1;
        if rest.deg() < 2 * d {
            out.push((rest.clone(), 1));
            break;
        }
        xq = xq.pow_mod(&BigUint::from(p), &rest);
        let g = rest.gcd(&xq.sub(&Poly::x(p)));
        if g.deg() > 0 {
            for q in equal_degree(&g, d, rng) {
                out.push((q, 1));
            }
            rest = divide_exact(&rest, &g);
            xq = xq.rem(&rest.clone().monic());
        }
    }
    out
}

/// Cantor-Zassenhaus split of a squarefree product of degree-d irreducibles.
fn equal_degree(f: &Poly, d: usize, rng: &mut Rng) -> Vec<Poly> {
    let p = f.p;
    if f.deg() == d {
        return vec![f.monic()];
    }
    loop {
        let mut c: Vec<u64> = (0..f.deg()).map(|_| rng.below(p)).collect();
        c.push(1);
        let a = Poly::new(p, c);
        let g = if p == 2 {
            // trace map: a + a^2 + a^4 + ... + a^{2^{d-1}}
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            f.gcd(&acc)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&e, f);
            f.gcd(&b.sub(&Poly::one(p)))
        };
        if !g.is_zero() && g.deg() > 0 && g.deg() < f.deg() {
            let h = divide_exact(f, &g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
pub fn xgcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
    let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
    while !r1.is_zero() {
        let q = poly_div(&r0, &r1);
        let r = r0.sub(&q.mul(&r1));
        r0 = r1;
        r1 = r;
        let s = s0.sub(&q.mul(&s1));
        s0 = s1;
        s1 = s;
        let t = t0.sub(&q.mul(&t1));
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = inv_mod(r0.lead(), p);
    let scale = Poly::new(p, vec![inv]);
    (r0.monic(), s0.mul(&scale), t0.mul(&scale))
}

fn poly_div(a: &Poly, b: &Poly) -> Poly {
    let p = a.p;
    if a.is_zero() || a.c.len() < b.c.len() {
        return Poly::zero(p);
    }
    let mut r = a.c.clone();
    let db = b.deg();
    let lead_inv = inv_mod(b.lead(), p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k] * lead_inv % p;
        q[k - db] = c;
        if c != 0 {
            for (j, &bc) in b.c.iter().enumerate() {
                let idx = k - db + j;
                r[idx] = (r[idx] + p * p - c * bc % p) % p;
            }
        }
        r.pop();
    }
    Poly::new(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_splits_simple_products() {
        let p = 101;
        let mut rng = Rng::new(1);
        // (x-1)(x-2)^2
        let f = Poly::new(p, vec![p - 1, 1]).mul(&Poly::new(p, vec![p - 2, 1])).mul(&Poly::new(p, vec![p - 2, 1]));
        let fs = factor(&f, &mut rng);
        assert_eq!(fs.len(), 2);
        let mults: Vec<usize> = fs.iter().map(|x| x.1).collect();
        assert!(mults.contains(&1) && mults.contains(&2));
    }

    #[test]
    fn factor_irreducible_quadratic_over_f2() {
        // x^2 + x + 1 is irreducible over F_2
        let f = Poly::new(2, vec![1, 1, 1]);
        let mut rng = Rng::new(3);
        let fs = factor(&f, &mut rng);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, f);
        assert_eq!(fs[0].1, 1);
    }

    #[test]
    fn factor_frobenius_power() {
        // (x+1)^2 = x^2 + 1 over F_2 has zero derivative
        let f = Poly::new(2, vec![1, 0, 1]);
        let mut rng = Rng::new(5);
        let fs = factor(&f, &mut rng);
        assert_eq!(fs, vec![(Poly::new(2, vec![1, 1]), 2)]);
    }

    #[test]
    fn xgcd_bezout() {
        let p = 7;
        let a = Poly::new(p, vec![1, 1]); // x+1
        let b = Poly::new(p, vec![2, 1]); // x+2
        let (g, u, v) = xgcd(&a, &b);
        assert_eq!(g, Poly::one(p));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one(p));
    }

    #[test]
    fn random_products_refactor() {
        let p = 101;
        let mut rng = Rng::new(42);
        for _ in 0..20 {
            let f1 = Poly::new(p, vec![rng.below(p), 1]);
            let f2 = Poly::new(p, vec![rng.below(p), rng.below(p), 1]);
            let f = f1.mul(&f2);
            let fs = factor(&f, &mut rng);
            let mut back = Poly::one(p);
            for (q, m) in &fs {
                for _ in 0..*m {
                    back = back.mul(q);
                }
            }
            assert_eq!(back, f.monic());
        }
    }
}
