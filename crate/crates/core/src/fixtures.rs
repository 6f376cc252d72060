//! Bundled algebras and bimodules used by tests, benchmarks and the
//! acceptance suite: the two-vertex loop algebra and its partner from the
//! running counterexample, self-injective Nakayama algebras, small
//! hereditary algebras, and twisted-bimodule data for a positive
//! Gorenstein equivalence instance.

use std::sync::Arc;

use crate::algebra::{build_algebra, opposite, tensor_algebra, Algebra, Relation};
use crate::linalg::{Field, Matrix, Scalar};
use crate::quiver::{Path, Quiver};
use crate::rep::Rep;
use crate::rng::Rng;

fn rel(terms: Vec<(Scalar, Path)>) -> Relation {
    Relation { terms }
}

/// `kQ / <a^2, b*a>` with `a` a loop at vertex 1 and `b: 1 -> 2`.
/// Basis paths e1, e2, a, b. Not Gorenstein.
pub fn lambda(f: Field) -> Algebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "1".into()), ("b".into(), "1".into(), "2".into())],
    )
    .unwrap();
    let aa = Path { source: 0, word: vec![0, 0] };
    let ba = Path { source: 0, word: vec![0, 1] };
    let relations = vec![rel(vec![(f.one(), aa)]), rel(vec![(f.one(), ba)])];
    build_algebra(q, relations, f, 16).unwrap()
}

/// `k[g]/(g^2)` at a single vertex named 3. Self-injective.
pub fn sigma(f: Field) -> Algebra {
    let q = Quiver::new(vec!["3".into()], vec![("g".into(), "3".into(), "3".into())]).unwrap();
    let gg = Path { source: 0, word: vec![0, 0] };
    build_algebra(q, vec![rel(vec![(f.one(), gg)])], f, 16).unwrap()
}

/// The one-point algebra `k`.
pub fn one_point(f: Field) -> Algebra {
    let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
    build_algebra(q, vec![], f, 4).unwrap()
}

/// The semisimple algebra `k x k`.
pub fn k_times_k(f: Field) -> Algebra {
    let q = Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap();
    build_algebra(q, vec![], f, 4).unwrap()
}

/// Hereditary path algebra of `1 -> 2`, dimension 3.
pub fn arrow_algebra(f: Field) -> Algebra {
    let q = Quiver::new(vec!["1".into(), "2".into()], vec![("a".into(), "1".into(), "2".into())]).unwrap();
    build_algebra(q, vec![], f, 8).unwrap()
}

/// Linear `A_3` quiver `1 -> 2 -> 3` with the length-two path killed.
/// Global dimension 2, Gorenstein.
pub fn a3_radical_square(f: Field) -> Algebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![("a".into(), "1".into(), "2".into()), ("b".into(), "2".into(), "3".into())],
    )
    .unwrap();
    let ba = Path { source: 0, word: vec![0, 1] };
    build_algebra(q, vec![rel(vec![(f.one(), ba)])], f, 8).unwrap()
}

/// Self-injective cyclic Nakayama algebra: `n` vertices in a cycle, all
/// paths of length `len` zero.
pub fn nakayama(f: Field, n: usize, len: usize) -> Algebra {
    assert!(n >= 1 && len >= 2);
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (0..n)
        .map(|i| (format!("a{}", i + 1), vertices[i].clone(), vertices[(i + 1) % n].clone()))
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    let mut relations = Vec::new();
    for start in 0..n {
        let word: Vec<usize> = (0..len).map(|k| (start + k) % n).collect();
        relations.push(rel(vec![(f.one(), Path { source: start, word })]));
    }
    build_algebra(q, relations, f, len + 4).unwrap()
}

/// The tensor algebra `lambda (x) sigma^op` of the running example.
pub fn example7_tensor_lambda_sigma_op(f: Field) -> Algebra {
    let l = Arc::new(lambda(f));
    let sop = Arc::new(opposite(&sigma(f)).unwrap());
    tensor_algebra(&l, &sop).unwrap()
}

/// The tensor algebra `sigma (x) lambda^op` of the running example.
pub fn example7_tensor_sigma_lambda_op(f: Field) -> Algebra {
    let s = Arc::new(sigma(f));
    let lop = Arc::new(opposite(&lambda(f)).unwrap());
    tensor_algebra(&s, &lop).unwrap()
}

fn nil2(f: Field) -> Matrix {
    Matrix::from_i64(f, &[&[0, 0], &[1, 0]])
}

/// The bimodule `M` of the running example, over `lambda (x) sigma^op`:
/// `k^2` at both vertices, every arrow acting by the square-zero matrix.
pub fn example7_m(f: Field) -> Rep {
    let alg = Arc::new(example7_tensor_lambda_sigma_op(f));
    let dims = vec![2, 2];
    let maps = alg.quiver.arrows.iter().map(|_| nil2(f)).collect();
    Rep::new(alg, dims, maps).unwrap()
}

/// The bimodule `N` of the running example, over `sigma (x) lambda^op`:
/// `k^2` at `3x1`, zero at `3x2`.
pub fn example7_n(f: Field) -> Rep {
    let alg = Arc::new(example7_tensor_sigma_lambda_op(f));
    let mut dims = vec![0; 2];
    let v1 = alg.quiver.vertex_index("3x1").unwrap();
    let v2 = alg.quiver.vertex_index("3x2").unwrap();
    dims[v1] = 2;
    dims[v2] = 0;
    let maps = alg
        .quiver
        .arrows
        .iter()
        .map(|a| {
            if a.source == v1 && a.target == v1 {
                nil2(f)
            } else {
                Matrix::zeros(f, dims[a.target], dims[a.source])
            }
        })
        .collect();
    Rep::new(alg, dims, maps).unwrap()
}

/// The representation of `lambda` as a module over its enveloping algebra,
/// exactly as displayed in the running example: `k^2` at `1x1`, zero at
/// `1x2`, `k` at `2x1` and at `2x2`.
pub fn example7_lambda_bimodule_display(f: Field, env: &Arc<Algebra>) -> Rep {
    let q = &env.quiver;
    let v11 = q.vertex_index("1x1").unwrap();
    let v12 = q.vertex_index("1x2").unwrap();
    let v21 = q.vertex_index("2x1").unwrap();
    let v22 = q.vertex_index("2x2").unwrap();
    let mut dims = vec![0; 4];
    dims[v11] = 2;
    dims[v12] = 0;
    dims[v21] = 1;
    dims[v22] = 1;
    let mut maps: Vec<Matrix> = q.arrows.iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
    let set = |maps: &mut Vec<Matrix>, name: &str, m: Matrix| {
        let i = q.arrow_index(name).unwrap();
        maps[i] = m;
    };
    set(&mut maps, "ax1", nil2(f));
    set(&mut maps, "1xa", nil2(f));
    set(&mut maps, "bx1", Matrix::from_i64(f, &[&[1, 0]]));
    set(&mut maps, "2xb", Matrix::from_i64(f, &[&[1]]));
    Rep::new(Arc::clone(env), dims, maps).unwrap()
}

/// The displayed representation of `m (x)_sigma n` over the enveloping
/// algebra of `lambda`: `k^2` at the `x1` vertices, zero at the `x2` ones,
/// all four incident arrows acting by the square-zero matrix.
pub fn example7_m_tensor_n_display(f: Field, env: &Arc<Algebra>) -> Rep {
    let q = &env.quiver;
    let v11 = q.vertex_index("1x1").unwrap();
    let v21 = q.vertex_index("2x1").unwrap();
    let mut dims = vec![0; 4];
    dims[v11] = 2;
    dims[v21] = 2;
    let mut maps: Vec<Matrix> = q.arrows.iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
    for (name, m) in [("ax1", nil2(f)), ("1xa", nil2(f)), ("bx1", nil2(f)), ("2xa", nil2(f))] {
        let i = q.arrow_index(name).unwrap();
        maps[i] = m;
    }
    Rep::new(Arc::clone(env), dims, maps).unwrap()
}

/// Twisted regular bimodule over a one-vertex algebra: left action is
/// plain multiplication, the right action of the loop is scaled by `c`.
/// For `sigma` this is the graph bimodule of the automorphism `g -> c*g`.
pub fn sigma_twist_bimodule(f: Field, env: &Arc<Algebra>, c: i64) -> Rep {
    let q = &env.quiver;
    let left = q.arrow_index("gx3").unwrap();
    let right = q.arrow_index("3xg").unwrap();
    let mut maps = vec![Matrix::zeros(f, 2, 2); 2];
    maps[left] = nil2(f);
    maps[right] = Matrix::from_fn(f, 2, 2, |i, j| if (i, j) == (1, 0) { f.from_i64(c) } else { f.zero() });
    Rep::new(Arc::clone(env), vec![2], maps).unwrap()
}

/// Deterministic pseudo-random module over an algebra: the quotient of a
/// random finite projective by the submodule generated by random elements.
pub fn random_module(alg: &Arc<Algebra>, rng: &mut Rng, size_hint: usize) -> Rep {
    let n = alg.n_vertices();
    let mut mults = vec![0usize; n];
    for _ in 0..size_hint.max(1) {
        mults[rng.below(n as u64) as usize] += 1;
    }
    if mults.iter().all(|&m| m == 0) {
        mults[0] = 1;
    }
    let mut pieces = Vec::new();
    for (v, &m) in mults.iter().enumerate() {
        for _ in 0..m {
            pieces.push(crate::rep::projective(alg, v));
        }
    }
    let proj = crate::rep::direct_sum(&pieces);
    // generate a random submodule and quotient by it
    let total = proj.total_dim();
    if total == 0 {
        return proj;
    }
    let n_gens = (rng.below(3) + 1) as usize;
    let mut gens = Vec::new();
    for _ in 0..n_gens {
        let mut v = Matrix::zeros(alg.field, total, 1);
        for i in 0..total {
            if rng.below(3) == 0 {
                v.set(i, 0, alg.field.random(rng));
            }
        }
        gens.push(v);
    }
    let sub = crate::rep::submodule_generated(&proj, &gens);
    crate::rep::cokernel(&sub.1).0
}
