//! Class groups and units from the integer relation matrix of the S-unit search, and prime
//! splitting records.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::ideal::{primes_above, PrimeIdeal};
use super::order::{FieldElt, NumberFieldData};
use super::relations::{BoundInfo, Relation, RelationSearch, SearchConfig};
use crate::exact_core::intmat::{hnf, hnf_mod, smith_invariants};
use crate::{Error, Result};

/// Decomposition of a rational prime.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PrimeSplitting {
    pub q: u64,
    pub primes: Vec<PrimeIdeal>,
}

impl PrimeSplitting {
    pub fn ef(&self) -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = self.primes.iter().map(|p| (p.e, p.f)).collect();
        v.sort_unstable();
        v
    }

    pub fn degree_sum(&self) -> u32 {
        self.primes.iter().map(|p| p.e * p.f).sum()
    }
}

pub fn splitting_type(k: &NumberFieldData, q: u64) -> Result<PrimeSplitting> {
    if !crate::exact_core::ntheory::is_prime_u64(q) {
        return Err(Error::Precondition(format!("{q} is not prime")));
    }
    Ok(PrimeSplitting { q, primes: primes_above(k, q) })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassUnitData {
    /// Cyclic factors `d_1 | d_2 | ...` of the class group (empty when trivial).
    pub class_group: Vec<u64>,
    pub class_number: u64,
    pub unit_rank: usize,
    /// Independent units of infinite order, in integral-basis coordinates.
    #[serde(serialize_with = "crate::serde_big::int_rows")]
    pub units: Vec<Vec<BigInt>>,
    pub regulator: f64,
    pub grh: bool,
    pub bound: BoundInfo,
    pub relations: usize,
}

/// Rounds without a change of the relation lattice before it is accepted.
const STABLE_ROUNDS: usize = 4;
const ROUND: usize = 1000;
const MAX_ROUNDS: usize = 400;

fn dense(r: &Relation, n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    for &(i, e) in &r.vals {
        v[i] = BigInt::from(e);
    }
    v
}

/// Greedy choice of independent units of small log-height.
fn independent_units(k: &NumberFieldData, cands: &[Vec<BigInt>], r: usize) -> (Vec<Vec<BigInt>>, f64) {
    let mut scored: Vec<(f64, Vec<f64>, &Vec<BigInt>)> = cands
        .iter()
        .map(|u| {
            let l = k.log_embedding(u);
            (l.iter().map(|x| x * x).sum::<f64>(), l, u)
        })
        .filter(|(h, _, _)| *h > 1e-8)
        .collect();
    scored.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut ortho: Vec<Vec<f64>> = vec![];
    let mut chosen = vec![];
    let mut logs = vec![];
    for (_, l, u) in scored {
        if chosen.len() == r {
            break;
        }
        let mut w = l.clone();
        for o in &ortho {
            let c = w.iter().zip(o).map(|(a, b)| a * b).sum::<f64>() / o.iter().map(|x| x * x).sum::<f64>();
            w.iter_mut().zip(o).for_each(|(a, b)| *a -= c * b);
        }
        if w.iter().map(|x| x * x).sum::<f64>().sqrt() > 1e-6 {
            ortho.push(w);
            chosen.push(u.clone());
            logs.push(l);
        }
    }
    // regulator: |det| of the log matrix with one place dropped
    let m: Vec<Vec<f64>> = logs.iter().map(|l| l[..r].to_vec()).collect();
    (chosen, det_f64(m).abs())
}

fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&a, &b| m[a][c].abs().partial_cmp(&m[b][c].abs()).unwrap()).unwrap();
        if m[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        for i in c + 1..n {
            let f = m[i][c] / m[c][c];
            for j in c..n {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    d
}

/// Class group and units. The relation lattice is accepted once it has full rank and stays
/// unchanged for several rounds of fresh relations.
pub fn class_and_units(k: &NumberFieldData, cfg: &SearchConfig) -> Result<ClassUnitData> {
    let mut s = RelationSearch::new(k, cfg);
    s.run_selmer()?;
    let n = s.fb.len();
    let r = k.unit_rank();
    let mut by_vals: HashMap<Vec<(usize, u32)>, usize> = HashMap::new();
    let mut units: Vec<Vec<BigInt>> = vec![];
    let mut seen_rels = 0;
    let mut last: Option<(BigInt, Vec<BigInt>)> = None;
    let mut stable = 0;
    for _ in 0..MAX_ROUNDS {
        for i in seen_rels..s.rels.len() {
            let rel = &s.rels[i];
            if rel.vals.is_empty() {
                units.push(rel.elt.clone());
            } else if let Some(&j) = by_vals.get(&rel.vals) {
                let inv = k.inverse(&FieldElt::integral(s.rels[j].elt.clone())).expect("nonzero");
                let u = k.mul_elt(&FieldElt::integral(rel.elt.clone()), &inv);
                if u.den.is_one() {
                    units.push(u.num);
                }
            } else {
                by_vals.insert(rel.vals.clone(), i);
            }
        }
        seen_rels = s.rels.len();
        let rows: Vec<Vec<BigInt>> = s.rels.iter().filter(|x| !x.vals.is_empty()).map(|x| dense(x, n)).collect();
        let h = match &last {
            Some((d, _)) => hnf_mod(&rows, n, d),
            None => hnf(&rows, n),
        };
        let full = h.len() == n && (0..n).all(|i| !h[i][i].is_zero());
        if full {
            let det: BigInt = (0..n).map(|i| h[i][i].abs()).product();
            let diag: Vec<BigInt> = (0..n).map(|i| h[i][i].clone()).collect();
            let unchanged = last.as_ref().is_some_and(|(d, dg)| *d == det && *dg == diag);
            stable = if unchanged { stable + 1 } else { 0 };
            last = Some((det, diag));
            let (us, _) = independent_units(k, &units, r);
            if stable >= STABLE_ROUNDS && us.len() == r {
                let cyc = smith_invariants(&h);
                let class_group: Vec<u64> = cyc
                    .iter()
                    .map(|x| x.abs().to_u64().ok_or_else(|| Error::Unsupported("class group too large".into())))
                    .collect::<Result<_>>()?;
                let (units, regulator) = independent_units(k, &units, r);
                return Ok(ClassUnitData {
                    class_number: class_group.iter().product(),
                    class_group,
                    unit_rank: r,
                    units,
                    regulator,
                    grh: s.fb.bound.grh_conditional,
                    bound: s.fb.bound.clone(),
                    relations: s.rels.len(),
                });
            }
        }
        if s.timed_out() {
            break;
        }
        s.step(ROUND);
    }
    Err(Error::Incomplete(format!(
        "relation lattice not settled after {} relations ({} units found)",
        s.rels.len(),
        units.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::IntPoly;
    use crate::field_lab::maximal_order;

    fn cu(c: &[i64]) -> ClassUnitData {
        class_and_units(&maximal_order(&IntPoly::from_i64(c)).unwrap(), &SearchConfig::default()).unwrap()
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(cu(&[5, 0, 1]).class_group, vec![2]);
        assert_eq!(cu(&[23, 0, 1]).class_group, vec![3]);
        let q2 = cu(&[-2, 0, 1]);
        assert!(q2.class_group.is_empty());
        assert_eq!(q2.unit_rank, 1);
        assert!((q2.regulator - (1.0 + 2f64.sqrt()).ln()).abs() < 1e-9);
    }

    #[test]
    fn splitting() {
        let k = maximal_order(&IntPoly::from_i64(&[5, 0, 1])).unwrap();
        assert_eq!(splitting_type(&k, 2).unwrap().ef(), vec![(2, 1)]);
        assert_eq!(splitting_type(&k, 3).unwrap().ef(), vec![(1, 1), (1, 1)]);
        assert!(splitting_type(&k, 4).is_err());
    }
}
