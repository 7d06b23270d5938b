use std::collections::{BTreeMap, HashSet};

use crate::algebra::{DegreeVector, Field, Monomial, SparsePoly, TermOrder};
use crate::basis::GroebnerBasis;
use crate::error::{Error, Result};
use crate::initial::MonomialIdeal;

/// Settings for one Buchberger run.
#[derive(Clone, Debug)]
pub struct OracleConfig<F: Field> {
    pub order: TermOrder,
    pub field: F,
    /// Discard S-pairs whose lcm degree exceeds the cap. Only meaningful for
    /// homogeneous input, where the result is then a basis up to that degree.
    pub degree_cap: Option<u32>,
}

impl<F: Field> OracleConfig<F> {
    pub fn new(order: TermOrder, field: F) -> Self {
        OracleConfig {
            order,
            field,
            degree_cap: None,
        }
    }
}

/// A term with its precomputed order key.
#[derive(Clone, Debug)]
struct Term<E> {
    key: Vec<i64>,
    mono: Monomial,
    coeff: E,
}

/// Working polynomial: terms sorted descending by order key.
#[derive(Clone, Debug)]
struct Poly<E> {
    terms: Vec<Term<E>>,
}

impl<E: Clone> Poly<E> {
    fn lead(&self) -> &Term<E> {
        &self.terms[0]
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }
}

fn add_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

struct Engine<'a, F: Field> {
    field: &'a F,
    order: &'a TermOrder,
}

impl<'a, F: Field> Engine<'a, F> {
    fn from_sparse(&self, p: &SparsePoly<F>) -> Poly<F::Elem> {
        let mut terms: Vec<Term<F::Elem>> = p
            .terms()
            .map(|(m, c)| Term {
                key: self.order.key(m),
                mono: m.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        Poly { terms }
    }

    fn to_sparse(&self, p: &Poly<F::Elem>, n: usize) -> SparsePoly<F> {
        SparsePoly::from_terms(
            self.field.clone(),
            n,
            p.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())),
        )
    }

    fn monic(&self, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
        let inv = self.field.inv(&p.lead().coeff);
        for t in p.terms.iter_mut() {
            t.coeff = self.field.mul(&t.coeff, &inv);
        }
        p
    }

    /// `c·x^q·g` as keyed terms (still sorted, since the key is linear).
    fn shifted(&self, g: &Poly<F::Elem>, q: &Monomial, c: &F::Elem) -> Vec<Term<F::Elem>> {
        let qk = self.order.key(q);
        g.terms
            .iter()
            .map(|t| Term {
                key: add_keys(&t.key, &qk),
                mono: t.mono.mul(q),
                coeff: self.field.mul(&t.coeff, c),
            })
            .collect()
    }

    /// Full reduction of `f` modulo `basis` (all terms, not just the head).
    fn reduce(&self, f: Vec<Term<F::Elem>>, basis: &[Poly<F::Elem>]) -> Poly<F::Elem> {
        let mut work: BTreeMap<Vec<i64>, (Monomial, F::Elem)> = BTreeMap::new();
        let push = |work: &mut BTreeMap<Vec<i64>, (Monomial, F::Elem)>, t: Term<F::Elem>| {
            match work.get_mut(&t.key) {
                Some(slot) => {
                    let s = self.field.add(&slot.1, &t.coeff);
                    if self.field.is_zero(&s) {
                        work.remove(&t.key);
                    } else {
                        slot.1 = s;
                    }
                }
                None => {
                    if !self.field.is_zero(&t.coeff) {
                        work.insert(t.key, (t.mono, t.coeff));
                    }
                }
            }
        };
        for t in f {
            push(&mut work, t);
        }
        let mut out = Vec::new();
        while let Some((key, (mono, coeff))) = work.pop_last() {
            let hit = basis.iter().find(|g| g.lm().divides(&mono));
            match hit {
                Some(g) => {
                    let q = mono.div(g.lm()).unwrap();
                    let c = self.field.neg(&self.field.div(&coeff, &g.lead().coeff));
                    for t in self.shifted(g, &q, &c).into_iter().skip(1) {
                        push(&mut work, t);
                    }
                }
                None => out.push(Term { key, mono, coeff }),
            }
        }
        Poly { terms: out }
    }

    fn spoly(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Vec<Term<F::Elem>> {
        let l = a.lm().lcm(b.lm());
        let qa = l.div(a.lm()).unwrap();
        let qb = l.div(b.lm()).unwrap();
        let ca = self.field.inv(&a.lead().coeff);
        let cb = self.field.neg(&self.field.inv(&b.lead().coeff));
        let mut terms = self.shifted(a, &qa, &ca);
        terms.extend(self.shifted(b, &qb, &cb));
        terms
    }
}

/// Buchberger's algorithm with the normal selection strategy and the product
/// and chain criteria. Returns the reduced basis (monic, interreduced).
pub fn buchberger<F: Field>(gens: &[SparsePoly<F>], cfg: &OracleConfig<F>) -> Result<GroebnerBasis<F>> {
    let n = cfg.order.n();
    for g in gens {
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.n(),
            });
        }
    }
    let eng = Engine {
        field: &cfg.field,
        order: &cfg.order,
    };
    let mut basis: Vec<Poly<F::Elem>> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: Vec<(u32, Vec<i64>, usize, usize)> = Vec::new();

    let add = |p: Poly<F::Elem>,
               basis: &mut Vec<Poly<F::Elem>>,
               pending: &mut HashSet<(usize, usize)>,
               queue: &mut Vec<(u32, Vec<i64>, usize, usize)>| {
        let idx = basis.len();
        let lm = p.lm().clone();
        basis.push(p);
        for i in 0..idx {
            let l = basis[i].lm().lcm(&lm);
            if cfg.degree_cap.is_some_and(|c| l.degree() > c) {
                continue;
            }
            pending.insert((i, idx));
            queue.push((l.degree(), cfg.order.key(&l), i, idx));
        }
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let r = eng.reduce(eng.from_sparse(g).terms, &basis);
        if !r.terms.is_empty() {
            add(eng.monic(r), &mut basis, &mut pending, &mut queue);
        }
    }

    while !queue.is_empty() {
        // Normal strategy: smallest lcm first.
        let best = (0..queue.len())
            .min_by(|&a, &b| (queue[a].0, &queue[a].1).cmp(&(queue[b].0, &queue[b].1)))
            .unwrap();
        let (_, _, i, j) = queue.swap_remove(best);
        pending.remove(&(i, j));
        let (a, b) = (&basis[i], &basis[j]);
        if a.lm().is_coprime(b.lm()) {
            continue;
        }
        let l = a.lm().lcm(b.lm());
        let chain = (0..basis.len()).any(|c| {
            c != i
                && c != j
                && basis[c].lm().divides(&l)
                && !pending.contains(&(i.min(c), i.max(c)))
                && !pending.contains(&(j.min(c), j.max(c)))
        });
        if chain {
            continue;
        }
        let s = eng.spoly(a, b);
        let r = eng.reduce(s, &basis);
        if !r.terms.is_empty() {
            add(eng.monic(r), &mut basis, &mut pending, &mut queue);
        }
    }

    // Minimalize.
    let mut keep: Vec<Poly<F::Elem>> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    for p in sorted {
        if !keep.iter().any(|q| q.lm().divides(p.lm())) {
            keep.push(p);
        }
    }
    // Interreduce tails.
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Poly<F::Elem>> = keep
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let head = keep[idx].terms[0].clone();
        let tail = eng.reduce(keep[idx].terms[1..].to_vec(), &others);
        let mut terms = vec![head];
        terms.extend(tail.terms);
        reduced.push(eng.monic(Poly { terms }));
    }
    Ok(GroebnerBasis::new(
        cfg.order.clone(),
        reduced.iter().map(|p| eng.to_sparse(p, n)).collect(),
    ))
}

/// Generators `x_1^{m_1}, …, x_n^{m_n}, (x_1 + ⋯ + x_n)^k` over `field`.
pub fn aci_generators<F: Field>(m: &DegreeVector, k: u32, field: &F) -> Vec<SparsePoly<F>> {
    let n = m.n();
    let mut gens: Vec<SparsePoly<F>> = (0..n)
        .map(|i| SparsePoly::monomial(field.clone(), Monomial::var_power(n, i, m.as_slice()[i])))
        .collect();
    gens.push(SparsePoly::linear_form(field.clone(), n, 1).pow(k));
    gens
}

/// True iff every S-polynomial of `candidate` reduces to zero, every generator
/// reduces to zero modulo `candidate`, and every candidate element reduces to
/// zero modulo a basis of the generators.
pub fn verify_is_gb<F: Field>(candidate: &GroebnerBasis<F>, gens: &[SparsePoly<F>], field: &F) -> Result<bool> {
    let order = candidate.order();
    let els = candidate.elements();
    if els.is_empty() {
        return Ok(gens.iter().all(SparsePoly::is_zero));
    }
    for (i, a) in els.iter().enumerate() {
        for b in &els[i + 1..] {
            let (la, ca) = a.leading_term(order)?;
            let (lb, cb) = b.leading_term(order)?;
            if la.is_coprime(&lb) {
                continue;
            }
            let l = la.lcm(&lb);
            let s = a
                .mul_term(&l.div(&la).unwrap(), &field.inv(&ca))
                .sub(&b.mul_term(&l.div(&lb).unwrap(), &field.inv(&cb)));
            if !s.reduce(els, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    for g in gens {
        if !g.reduce(els, order)?.is_zero() {
            return Ok(false);
        }
    }
    let truth = buchberger(gens, &OracleConfig::new(order.clone(), field.clone()))?;
    for g in els {
        if !g.reduce(truth.elements(), order)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal generators of the initial ideal of `I_{n,m,k}` from a Buchberger run.
pub fn initial_ideal_oracle<F: Field>(m: &DegreeVector, k: u32, cfg: &OracleConfig<F>) -> Result<MonomialIdeal> {
    let gb = buchberger(&aci_generators(m, k, &cfg.field), cfg)?;
    Ok(gb.initial_ideal())
}
