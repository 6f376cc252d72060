//! Noncommutative path rewriting: Buchberger/Knuth-Bendix completion for
//! admissible path ideals under the length-then-lex monomial order.
//!
//! Rules are monic, `lead -> rest`, with every rest term strictly smaller
//! in deglex (in particular never longer), so reduction terminates and the
//! completed system is confluent on all words up to the configured length
//! bound. Overlaps beyond the bound cannot touch such words and are skipped.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};
use crate::quiver::{Path, Quiver};

#[derive(Clone, Debug)]
pub struct Rule {
    pub lead: Path,
    pub rest: Vec<(Scalar, Path)>,
}

#[derive(Clone, Debug)]
pub struct Rewriter {
    pub field: Field,
    pub rules: Vec<Rule>,
    pub max_len: usize,
}

type Combo = BTreeMap<Path, Scalar>;

impl Rewriter {
    /// Complete the initial relations into a confluent system for words of
    /// length at most `max_len`.
    pub fn complete(quiver: &Quiver, field: Field, relations: &[Vec<(Scalar, Path)>], max_len: usize) -> Result<Rewriter> {
        let mut rw = Rewriter { field, rules: Vec::new(), max_len };
        let mut work: Vec<Combo> = relations.iter().map(|r| rw.combo_from(r)).collect();
        let mut guard = 0usize;
        while let Some(poly) = work.pop() {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::Invalid("rewriting completion did not stabilize".into()));
            }
            let reduced = rw.reduce(poly);
            let Some(rule) = rw.make_rule(reduced) else { continue };
            // drop rules whose lead the new rule now reduces, requeue them
            let lead = rule.lead.clone();
            let mut kept = Vec::new();
            for old in rw.rules.drain(..) {
                if contains_subword(&old.lead.word, &lead.word) {
                    let mut c: Combo = BTreeMap::new();
                    add_term(&mut c, field, old.lead.clone(), field.one());
                    for (s, p) in &old.rest {
                        add_term(&mut c, field, p.clone(), field.neg(s));
                    }
                    work.push(c);
                } else {
                    kept.push(old);
                }
            }
            rw.rules = kept;
            // queue the S-polynomials of all overlaps with the new rule
            for other in rw.rules.iter().chain(std::iter::once(&rule)) {
                for sp in overlaps(&rw, &rule, other, quiver) {
                    work.push(sp);
                }
                if !std::ptr::eq(other, &rule) {
                    for sp in overlaps(&rw, other, &rule, quiver) {
                        work.push(sp);
                    }
                }
            }
            rw.rules.push(rule);
        }
        // inter-reduce the rests for a canonical reduced system
        let snapshot = rw.clone();
        for rule in rw.rules.iter_mut() {
            let mut c: Combo = BTreeMap::new();
            for (s, p) in &rule.rest {
                add_term(&mut c, field, p.clone(), s.clone());
            }
            let red = snapshot.reduce(c);
            rule.rest = red.into_iter().map(|(p, s)| (s, p)).collect();
        }
        rw.rules.sort_by(|a, b| a.lead.cmp_deglex(&b.lead));
        Ok(rw)
    }

    fn combo_from(&self, terms: &[(Scalar, Path)]) -> Combo {
        let mut c = BTreeMap::new();
        for (s, p) in terms {
            add_term(&mut c, self.field, p.clone(), s.clone());
        }
        c
    }

    /// Fully reduce a linear combination of paths.
    fn reduce(&self, mut combo: Combo) -> Combo {
        loop {
            let mut target: Option<(Path, usize, usize)> = None;
            'search: for path in combo.keys() {
                for (ri, rule) in self.rules.iter().enumerate() {
                    if let Some(pos) = find_subword(&path.word, &rule.lead.word) {
                        target = Some((path.clone(), ri, pos));
                        break 'search;
                    }
                }
            }
            let Some((path, ri, pos)) = target else { return combo };
            let coeff = combo.remove(&path).unwrap();
            let rule = &self.rules[ri];
            let llen = rule.lead.word.len();
            for (s, t) in &rule.rest {
                let mut word = path.word[..pos].to_vec();
                word.extend_from_slice(&t.word);
                word.extend_from_slice(&path.word[pos + llen..]);
                let np = Path { source: path.source, word };
                add_term(&mut combo, self.field, np, self.field.mul(&coeff, s));
            }
        }
    }

    pub fn reduce_terms(&self, terms: &[(Scalar, Path)]) -> Vec<(Scalar, Path)> {
        self.reduce(self.combo_from(terms)).into_iter().map(|(p, s)| (s, p)).collect()
    }

    /// Turn a reduced nonzero combination into a monic rule.
    fn make_rule(&self, combo: Combo) -> Option<Rule> {
        let lead = combo.keys().max_by(|a, b| a.cmp_deglex(b))?.clone();
        let lead_coeff = combo.get(&lead).unwrap().clone();
        let inv = self.field.inv(&lead_coeff);
        let mut rest = Vec::new();
        for (p, s) in combo {
            if p == lead {
                continue;
            }
            // lead -> -(rest)/lead_coeff
            rest.push((self.field.neg(&self.field.mul(&s, &inv)), p));
        }
        Some(Rule { lead, rest })
    }

    pub fn is_irreducible_word(&self, word: &[usize]) -> bool {
        self.rules.iter().all(|r| find_subword(word, &r.lead.word).is_none())
    }

    /// Only the tail of a word can become reducible after appending one
    /// arrow; used by the breadth-first basis enumeration.
    pub fn tail_reducible(&self, word: &[usize]) -> bool {
        self.rules.iter().any(|r| {
            let l = r.lead.word.len();
            l <= word.len() && word[word.len() - l..] == r.lead.word[..]
        })
    }
}

fn add_term(combo: &mut Combo, field: Field, p: Path, s: Scalar) {
    use std::collections::btree_map::Entry;
    match combo.entry(p) {
        Entry::Vacant(e) => {
            if !field.is_zero(&s) {
                e.insert(s);
            }
        }
        Entry::Occupied(mut e) => {
            let v = field.add(e.get(), &s);
            if field.is_zero(&v) {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

fn find_subword(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| hay[i..i + needle.len()] == *needle)
}

fn contains_subword(hay: &[usize], needle: &[usize]) -> bool {
    find_subword(hay, needle).is_some()
}

/// S-polynomials of the proper overlaps "suffix of r1.lead = prefix of
/// r2.lead".
fn overlaps(rw: &Rewriter, r1: &Rule, r2: &Rule, _quiver: &Quiver) -> Vec<Combo> {
    let u = &r1.lead.word;
    let v = &r2.lead.word;
    let mut out = Vec::new();
    let max_ov = u.len().min(v.len());
    for ov in 1..=max_ov {
        if ov == u.len() && ov == v.len() {
            continue; // identical leads, not a proper overlap
        }
        if u[u.len() - ov..] != v[..ov] {
            continue;
        }
        let wlen = u.len() + v.len() - ov;
        if wlen > rw.max_len {
            continue;
        }
        let mut combo: Combo = BTreeMap::new();
        // reduce w = u ++ v[ov..] via r1 ...
        for (s, t) in &r1.rest {
            let mut word = t.word.clone();
            word.extend_from_slice(&v[ov..]);
            add_term(&mut combo, rw.field, Path { source: r1.lead.source, word }, s.clone());
        }
        // ... minus the reduction via r2
        let prefix = &u[..u.len() - ov];
        for (s, t) in &r2.rest {
            let mut word = prefix.to_vec();
            word.extend_from_slice(&t.word);
            add_term(&mut combo, rw.field, Path { source: r1.lead.source, word }, rw.field.neg(s));
        }
        out.push(combo);
    }
    out
}
