//! Honda systems of exponent p for the simple objects `E_lambda` and their self-extensions:
//! parameters `s = [s1 s2 s3 s4 s5]`, Baer sums, validation of the V/F matrices, the conductor
//! classifier, the corner tables `chi_s` over F2 and the prolongation / Ext decisions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::exact_core::{linalg_fp, FfElem, FiniteField};
use crate::f2_groups::{corner, delta_span, Claim, Mat4, CORNER_LABELS, M4_ID};
use crate::{Error, Result};

/// Honda parameter with `s4` reduced to a canonical representative of `k / (sigma^4 - 1) k`.
#[derive(Clone, Debug)]
pub struct HondaParam {
    k: FiniteField,
    s: [FfElem; 5],
}

/// Reduce `a` modulo the F_p-row space `rows` (in echelon form with the given pivots).
fn reduce_mod_rows(a: &mut [u64], rows: &[Vec<u64>], pivots: &[usize], p: u64) {
    for (r, &c) in rows.iter().zip(pivots) {
        let f = a[c] % p;
        if f != 0 {
            // rows are normalized with pivot 1
            for (x, y) in a.iter_mut().zip(r) {
                *x = (*x + p - f * y % p) % p;
            }
        }
    }
}

fn slot4_image(k: &FiniteField) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut m = k.frobenius_minus_one_matrix(4);
    let piv = linalg_fp::rref(&mut m, k.p());
    m.truncate(piv.len());
    (m, piv)
}

impl HondaParam {
    pub fn new(k: &FiniteField, s: Vec<FfElem>) -> Result<Self> {
        if s.len() != 5 {
            return Err(Error::Precondition(format!("a Honda parameter has 5 components, got {}", s.len())));
        }
        if s.iter().any(|x| x.len() != k.degree() || x.iter().any(|&c| c >= k.p())) {
            return Err(Error::Precondition("component is not an element of k".into()));
        }
        let mut s: [FfElem; 5] = s.try_into().unwrap();
        let (rows, piv) = slot4_image(k);
        reduce_mod_rows(&mut s[3], &rows, &piv, k.p());
        Ok(HondaParam { k: k.clone(), s })
    }

    pub fn zero(k: &FiniteField) -> Self {
        HondaParam::new(k, vec![k.zero(); 5]).unwrap()
    }

    /// Parameter over F2 from a string such as `"11000"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let k = FiniteField::new(2, 1)?;
        let s: Vec<FfElem> = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(vec![0]),
                '1' => Ok(vec![1]),
                _ => Err(Error::Parse(format!("bad Honda parameter {bits:?}"))),
            })
            .collect::<Result<_>>()?;
        HondaParam::new(&k, s)
    }

    /// Over F2, the parameter with bit `i` (from the left) equal to `s_{i+1}`.
    pub fn from_index(i: u32) -> Self {
        let bits: String = (0..5).map(|j| if i >> (4 - j) & 1 == 1 { '1' } else { '0' }).collect();
        Self::from_bits(&bits).unwrap()
    }

    pub fn field(&self) -> &FiniteField {
        &self.k
    }

    pub fn get(&self, i: usize) -> &FfElem {
        &self.s[i - 1]
    }

    pub fn components(&self) -> &[FfElem; 5] {
        &self.s
    }

    /// Baer sum.
    pub fn add(&self, o: &HondaParam) -> Result<HondaParam> {
        if self.k != o.k {
            return Err(Error::Precondition("parameters over different fields".into()));
        }
        HondaParam::new(&self.k, (0..5).map(|i| self.k.add(&self.s[i], &o.s[i])).collect())
    }

    pub fn neg(&self) -> HondaParam {
        HondaParam::new(&self.k, self.s.iter().map(|x| self.k.neg(x)).collect()).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.s.iter().all(|x| self.k.is_zero(x))
    }
}

impl PartialEq for HondaParam {
    fn eq(&self, o: &Self) -> bool {
        self.k == o.k && self.s == o.s
    }
}

impl Eq for HondaParam {}

impl fmt::Display for HondaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k.degree() == 1 {
            write!(f, "[")?;
            for x in &self.s {
                write!(f, "{}", x[0])?;
            }
            write!(f, "]")
        } else {
            let parts: Vec<String> = self.s.iter().map(|x| format!("{x:?}")).collect();
            write!(f, "[{}]", parts.join(" "))
        }
    }
}

/// A finite Honda system `(M, L)` given by matrices of the semilinear F and V on a k-basis.
#[derive(Clone, Debug)]
pub struct HondaSystem {
    pub k: FiniteField,
    pub dim: usize,
    /// `v[i][j]`: coefficient of `e_i` in `V e_j`.
    pub v: Vec<Vec<FfElem>>,
    pub f: Vec<Vec<FfElem>>,
    /// Indices of the basis vectors spanning `L`.
    pub l: Vec<usize>,
}

/// Outcome of the Honda-system axioms and structural checks.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HondaChecks {
    pub fv_zero: bool,
    pub vf_zero: bool,
    pub v_injective_on_l: bool,
    pub l_direct_sum_fm: bool,
    pub dim_ker_f_equals_dim_l: bool,
    pub f_nilpotent: bool,
    pub v_nilpotent: bool,
}

impl HondaChecks {
    pub fn all(&self) -> bool {
        self.fv_zero
            && self.vf_zero
            && self.v_injective_on_l
            && self.l_direct_sum_fm
            && self.dim_ker_f_equals_dim_l
            && self.f_nilpotent
            && self.v_nilpotent
    }
}

fn rank_k(k: &FiniteField, mut rows: Vec<Vec<FfElem>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !k.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, piv);
        let inv = k.inv(&rows[r][c]).unwrap();
        for i in 0..rows.len() {
            if i != r && !k.is_zero(&rows[i][c]) {
                let f = k.mul(&rows[i][c], &inv);
                for j in 0..ncols {
                    let t = k.mul(&f, &rows[r][j]);
                    rows[i][j] = k.sub(&rows[i][j], &t);
                }
            }
        }
        r += 1;
    }
    r
}

impl HondaSystem {
    fn zero_matrix(k: &FiniteField, n: usize) -> Vec<Vec<FfElem>> {
        vec![vec![k.zero(); n]; n]
    }

    /// Matrix of `A o B` where `A` is `sigma^a`-semilinear.
    fn compose(&self, a: &[Vec<FfElem>], a_twist: i64, b: &[Vec<FfElem>]) -> Vec<Vec<FfElem>> {
        let k = &self.k;
        let n = self.dim;
        let mut out = Self::zero_matrix(k, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = k.zero();
                for t in 0..n {
                    acc = k.add(&acc, &k.mul(&a[i][t], &k.frob(&b[t][j], a_twist)));
                }
                out[i][j] = acc;
            }
        }
        out
    }

    fn is_zero_matrix(&self, m: &[Vec<FfElem>]) -> bool {
        m.iter().all(|r| r.iter().all(|x| self.k.is_zero(x)))
    }

    fn nilpotent(&self, m: &[Vec<FfElem>], twist: i64) -> bool {
        let mut pw = m.to_vec();
        for _ in 1..self.dim {
            pw = self.compose(m, twist, &pw);
        }
        self.is_zero_matrix(&pw)
    }

    fn columns(m: &[Vec<FfElem>], cols: impl Iterator<Item = usize>) -> Vec<Vec<FfElem>> {
        cols.map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
    }

    pub fn check(&self) -> HondaChecks {
        let k = &self.k;
        let n = self.dim;
        let rank_f = rank_k(k, Self::columns(&self.f, 0..n));
        let mut l_and_fm: Vec<Vec<FfElem>> =
            self.l.iter().map(|&i| (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect()).collect();
        l_and_fm.extend(Self::columns(&self.f, 0..n));
        HondaChecks {
            fv_zero: self.is_zero_matrix(&self.compose(&self.f, 1, &self.v)),
            vf_zero: self.is_zero_matrix(&self.compose(&self.v, -1, &self.f)),
            v_injective_on_l: rank_k(k, Self::columns(&self.v, self.l.iter().copied())) == self.l.len(),
            l_direct_sum_fm: rank_k(k, l_and_fm) == n && rank_f + self.l.len() == n,
            dim_ker_f_equals_dim_l: n - rank_f == self.l.len(),
            f_nilpotent: self.nilpotent(&self.f, 1),
            v_nilpotent: self.nilpotent(&self.v, -1),
        }
    }

    /// Restriction to basis vectors `idx`, assuming their span is stable (or taken as a quotient).
    pub fn block(&self, idx: &[usize]) -> HondaSystem {
        let pick = |m: &Vec<Vec<FfElem>>| idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect();
        HondaSystem {
            k: self.k.clone(),
            dim: idx.len(),
            v: pick(&self.v),
            f: pick(&self.f),
            l: self.l.iter().filter_map(|x| idx.iter().position(|y| y == x)).collect(),
        }
    }

    pub fn same_matrices(&self, o: &HondaSystem) -> bool {
        self.dim == o.dim && self.v == o.v && self.f == o.f && self.l == o.l
    }
}

fn check_lambda(k: &FiniteField, lambda: &FfElem) -> Result<()> {
    if lambda.len() != k.degree() || k.is_zero(lambda) {
        return Err(Error::Precondition("lambda must be a nonzero element of k".into()));
    }
    Ok(())
}

/// The 4-dimensional system of `E_lambda` in a standard basis `x1..x4`, `L = span(x1, x2)`.
pub fn simple_system(k: &FiniteField, lambda: &FfElem) -> Result<HondaSystem> {
    check_lambda(k, lambda)?;
    let mut v = HondaSystem::zero_matrix(k, 4);
    let mut f = HondaSystem::zero_matrix(k, 4);
    v[1][0] = k.one();
    v[2][1] = lambda.clone();
    f[3][0] = k.one();
    f[2][3] = k.one();
    let sys = HondaSystem { k: k.clone(), dim: 4, v, f, l: vec![0, 1] };
    if !sys.check().all() {
        return Err(Error::Inconsistent("simple system fails the Honda axioms".into()));
    }
    Ok(sys)
}

/// The 8-dimensional extension of `E_lambda` by itself with parameter `s`.
pub fn extension_system(lambda: &FfElem, s: &HondaParam) -> Result<HondaSystem> {
    let k = s.field();
    check_lambda(k, lambda)?;
    let mut v = HondaSystem::zero_matrix(k, 8);
    let mut f = HondaSystem::zero_matrix(k, 8);
    let frob_neg = |x: &FfElem| k.neg(&k.frob(x, 1));
    // V
    v[1][0] = k.one();
    v[2][1] = lambda.clone();
    v[3][4] = s.get(1).clone();
    v[5][4] = k.one();
    for i in 0..4 {
        v[i][5] = k.mul(lambda, s.get(i + 2));
    }
    v[6][5] = lambda.clone();
    // F
    f[3][0] = k.one();
    f[2][3] = k.one();
    f[2][5] = frob_neg(s.get(1));
    f[2][6] = frob_neg(s.get(5));
    f[3][6] = frob_neg(s.get(2));
    f[6][7] = k.one();
    f[7][4] = k.one();
    let sys = HondaSystem { k: k.clone(), dim: 8, v, f, l: vec![0, 1, 4, 5] };
    let checks = sys.check();
    if !checks.all() {
        return Err(Error::Inconsistent(format!("extension system fails the Honda axioms: {checks:?}")));
    }
    Ok(sys)
}

/// Sub and quotient of an extension system are both the simple system.
pub fn recovers_simple(lambda: &FfElem, sys: &HondaSystem) -> Result<bool> {
    let simple = simple_system(&sys.k, lambda)?;
    Ok(sys.block(&[0, 1, 2, 3]).same_matrices(&simple) && sys.block(&[4, 5, 6, 7]).same_matrices(&simple))
}

/// Baer sum computed on matrices: the fiber product over the quotient, modulo the antidiagonal
/// copy of the sub, in the basis `(e_i, 0)` for `i <= 4` and `(e_i, e_i')` for `i >= 5`.
pub fn baer_sum_system(a: &HondaSystem, b: &HondaSystem) -> Result<HondaSystem> {
    if a.dim != 8 || b.dim != 8 || a.k != b.k {
        return Err(Error::Precondition("Baer sum needs two extension systems over one field".into()));
    }
    let k = &a.k;
    let combine = |x: &Vec<Vec<FfElem>>, y: &Vec<Vec<FfElem>>| -> Result<Vec<Vec<FfElem>>> {
        let mut out = HondaSystem::zero_matrix(k, 8);
        for j in 0..8 {
            for i in 0..8 {
                out[i][j] = if j < 4 {
                    x[i][j].clone()
                } else if i < 4 {
                    k.add(&x[i][j], &y[i][j])
                } else {
                    if x[i][j] != y[i][j] {
                        return Err(Error::Inconsistent("quotients disagree".into()));
                    }
                    x[i][j].clone()
                };
            }
        }
        Ok(out)
    };
    Ok(HondaSystem { k: k.clone(), dim: 8, v: combine(&a.v, &b.v)?, f: combine(&a.f, &b.f)?, l: a.l.clone() })
}

/// Number of isomorphism classes of simple systems over `k`: orbits of `k^x` under
/// `lambda -> r^{1 - p^4} lambda`.
pub fn lambda_classes(k: &FiniteField, p: u64) -> Result<u64> {
    if k.p() != p {
        return Err(Error::Precondition(format!("k has characteristic {}, not {p}", k.p())));
    }
    let units: Vec<FfElem> = k.elements().filter(|x| !k.is_zero(x)).collect();
    let q1 = units.len() as u64;
    // exponent 1 - p^4 reduced modulo |k^x|
    let e = (q1 as i128 + (1 - (p as i128).pow(4)) % q1 as i128) as u64 % q1;
    let mut image: Vec<u64> = units.iter().map(|r| k.index(&k.pow(r, &num_bigint::BigUint::from(e)))).collect();
    image.sort_unstable();
    image.dedup();
    let mut seen = std::collections::HashSet::new();
    let mut orbits = 0;
    for lam in &units {
        if seen.contains(&k.index(lam)) {
            continue;
        }
        orbits += 1;
        for h in &image {
            seen.insert(k.index(&k.mul(&k.from_index(*h), lam)));
        }
    }
    Ok(orbits)
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum RamificationTag {
    Trivial,
    UnramifiedDegreeAtMostP,
    Ramified,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConductorClass {
    pub exponent: u64,
    pub tag: RamificationTag,
    /// `(component, exponent)` for the nonzero parts of the decomposition.
    pub components: Vec<(String, u64)>,
}

/// Conductor exponent of `F_a / F` from the decomposition
/// `[eps 0000] + [delta s2 000] + [00 s3 00] + [000 s4 0] + [0000 s5]`, with `lambda = 1`.
pub fn conductor_classify(s: &HondaParam, p: u64) -> Result<ConductorClass> {
    conductor_classify_with(s, p, &s.field().one())
}

pub fn conductor_classify_with(s: &HondaParam, p: u64, lambda: &FfElem) -> Result<ConductorClass> {
    let k = s.field();
    if k.p() != p {
        return Err(Error::Precondition(format!("k has characteristic {}, not {p}", k.p())));
    }
    check_lambda(k, lambda)?;
    let delta = if p == 2 {
        let ls = k.mul(lambda, s.get(2));
        k.mul(&ls, &ls)
    } else {
        k.zero()
    };
    let eps = k.sub(s.get(1), &delta);
    let mut components = vec![];
    if !k.is_zero(&eps) {
        components.push(("eps".to_string(), p * p - 2 * p + 2));
    }
    if !k.is_zero(s.get(2)) {
        components.push(("s2".to_string(), p * p));
    }
    if !k.is_zero(s.get(3)) {
        components.push(("s3".to_string(), p));
    }
    if !k.is_zero(s.get(4)) {
        components.push(("s4".to_string(), 0));
    }
    if !k.is_zero(s.get(5)) {
        components.push(("s5".to_string(), p));
    }
    let exponent = components.iter().map(|c| c.1).max().unwrap_or(0);
    let tag = if components.is_empty() {
        RamificationTag::Trivial
    } else if exponent == 0 {
        RamificationTag::UnramifiedDegreeAtMostP
    } else {
        RamificationTag::Ramified
    };
    Ok(ConductorClass { exponent, tag, components })
}

/// One monomial `coeff * lambda^l * a^i * b^j` of `w a^{-p^2}` after substituting `c = lambda a^{p^2}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: String,
    pub lambda_exp: i64,
    pub a_exp: i64,
    pub b_exp: i64,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.lambda_exp != 0 {
            write!(f, "*lambda^{}", self.lambda_exp)?;
        }
        if self.b_exp != 0 {
            write!(f, "*b^{}", self.b_exp)?;
        }
        if self.a_exp != 0 {
            write!(f, "*a^{}", self.a_exp)?;
        }
        Ok(())
    }
}

/// Symbolic `f_a(Z)` with coefficients in `lambda, eps, a, b` and the parameter symbols.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FaPolynomial {
    pub p: u64,
    pub nested: bool,
    pub degree: u64,
    pub constant: Vec<Monomial>,
    pub text: String,
}

pub fn f_a_polynomial(s: &HondaParam, p: u64) -> Result<FaPolynomial> {
    let k = s.field();
    if k.p() != p {
        return Err(Error::Precondition(format!("k has characteristic {}, not {p}", k.p())));
    }
    let pi = p as i64;
    let p2 = pi * pi;
    let mut constant = vec![];
    let mut push = |idx: usize, lambda_exp, a_exp, b_exp| {
        if !k.is_zero(s.get(idx)) {
            constant.push(Monomial { coeff: format!("s{idx}"), lambda_exp, a_exp, b_exp });
        }
    };
    push(2, 0, 1 - p2, 0);
    push(3, 0, -p2, 1);
    push(4, 0, 0, 0);
    push(5, 0, pi - p2, 0);
    let cls = conductor_classify(s, p)?;
    let nested = cls.components.iter().any(|c| c.0 == "eps");
    let w: Vec<String> = constant.iter().map(|m| m.to_string()).collect();
    let tail = if w.is_empty() { String::new() } else { format!(" + {}", w.join(" + ")) };
    let p4 = p.pow(4);
    let text = if nested {
        format!(
            "[(Z^{p} - {p}*lambda^-{p}*eps*a^{})^{p} - {p}^{}*Z^{}]^{} - Z{tail}",
            pi - pi * p2,
            p - 1,
            p * p,
            p * p
        )
    } else {
        format!("Z^{p4} - Z{tail}")
    };
    Ok(FaPolynomial { p, nested, degree: p4, constant, text })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrdTable {
    pub t: u64,
    #[serde(serialize_with = "crate::serde_big::rat")]
    pub ord_a: BigRational,
    #[serde(serialize_with = "crate::serde_big::rat")]
    pub ord_b: BigRational,
    #[serde(serialize_with = "crate::serde_big::rat")]
    pub ord_c: BigRational,
}

/// Valuations of `a, b, c` for the points of `E_lambda`, with the tame degree `t = (p^2+1)(p-1)`.
pub fn ord_table(p: u64) -> Result<OrdTable> {
    if !crate::exact_core::ntheory::is_prime_u64(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let t = (p * p + 1) * (p - 1);
    let r = |n: u64| BigRational::new(BigInt::from(n), BigInt::from(t));
    Ok(OrdTable { t, ord_a: r(1), ord_b: r(p * p - p + 1), ord_c: r(p * p) })
}

/// Values of `chi` on the generators `g0, g1, g2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CornerTriple {
    pub g0: Mat4,
    pub g1: Mat4,
    pub g2: Mat4,
}

pub fn corner_label(m: Mat4) -> Option<&'static str> {
    if m == M4_ID {
        return Some("I");
    }
    CORNER_LABELS.iter().copied().find(|l| corner(l) == Some(m))
}

impl CornerTriple {
    pub const ZERO: CornerTriple = CornerTriple { g0: 0, g1: 0, g2: 0 };

    pub fn add(&self, o: &Self) -> Self {
        CornerTriple { g0: self.g0 ^ o.g0, g1: self.g1 ^ o.g1, g2: self.g2 ^ o.g2 }
    }

    pub fn from_labels(g0: &str, g1: &str, g2: &str) -> Result<Self> {
        let get = |l: &str| match l {
            "I" => Ok(M4_ID),
            _ => corner(l).ok_or_else(|| Error::Parse(format!("unknown corner {l}"))),
        };
        Ok(CornerTriple { g0: get(g0)?, g1: get(g1)?, g2: get(g2)? })
    }

    pub fn is_valid(&self) -> bool {
        (self.g0 == 0 || self.g0 == M4_ID)
            && [self.g1, self.g2].iter().all(|&m| corner_label(m).is_some_and(|l| l != "I"))
    }

    pub fn labels(&self) -> [String; 3] {
        [self.g0, self.g1, self.g2].map(|m| corner_label(m).unwrap_or("?").to_string())
    }

    /// Conductor exponent of `L/F` read off from the corner values.
    pub fn conductor(&self) -> u64 {
        if self.g2 != 0 {
            4
        } else if self.g1 != 0 {
            2
        } else {
            0
        }
    }

    /// `|Gal(L/F)|`: size of the `F2[Delta]`-module spanned by the values.
    pub fn decomposition_order(&self) -> u64 {
        let mut span = delta_span(self.g1).sum(&delta_span(self.g2));
        span = span.sum(&delta_span(self.g0));
        1 << span.dim()
    }
}

/// The basic cases from which `chi_s` is generated by additivity.
pub fn basic_chi_cases() -> Vec<(&'static str, CornerTriple)> {
    let c = |a, b, d| CornerTriple::from_labels(a, b, d).unwrap();
    vec![
        ("00001", c("0", "15", "0")),
        ("00100", c("0", "15'", "0")),
        ("10000", c("0", "9", "0")),
        ("11000", c("0", "0", "9")),
        ("00010", c("I", "0", "0")),
    ]
}

fn bits_of(s: &HondaParam) -> Result<u32> {
    if s.field().order() != 2 {
        return Err(Error::Precondition("corner tables are defined over F2".into()));
    }
    Ok((1..=5).fold(0, |acc, i| acc << 1 | s.get(i)[0] as u32))
}

fn bits_str(b: u32) -> String {
    (0..5).map(|j| if b >> (4 - j) & 1 == 1 { '1' } else { '0' }).collect()
}

/// `chi_s` over F2 with `lambda = 1`, by additivity from the basic cases.
pub fn chi_table(s: &HondaParam) -> Result<CornerTriple> {
    let target = bits_of(s)?;
    let basic: Vec<(u32, CornerTriple)> =
        basic_chi_cases().into_iter().map(|(b, c)| (u32::from_str_radix(b, 2).unwrap(), c)).collect();
    // the basic parameters form a basis of F2^5: solve for the combination
    for combo in 0u32..32 {
        let sum = (0..5).filter(|i| combo >> i & 1 == 1).fold(0, |acc, i| acc ^ basic[i as usize].0);
        if sum == target {
            return Ok((0..5)
                .filter(|i| combo >> i & 1 == 1)
                .fold(CornerTriple::ZERO, |acc, i| acc.add(&basic[i as usize].1)));
        }
    }
    Err(Error::Inconsistent("basic cases do not span F2^5".into()))
}

/// The full corner tables for all 31 nonzero parameters, as pinned data.
pub fn pinned_chi_tables() -> Vec<(&'static str, [&'static str; 3])> {
    let mut rows = vec![
        ("00001", ["0", "15", "0"]),
        ("00100", ["0", "15'", "0"]),
        ("10000", ["0", "9", "0"]),
        ("10101", ["0", "4", "0"]),
        ("00101", ["0", "5", "0"]),
        ("10001", ["0", "11'", "0"]),
        ("10100", ["0", "11", "0"]),
        ("11000", ["0", "0", "9"]),
        ("01000", ["0", "9", "9"]),
        ("11001", ["0", "15", "9"]),
        ("11100", ["0", "15'", "9"]),
        ("01101", ["0", "4", "9"]),
        ("11101", ["0", "5", "9"]),
        ("01001", ["0", "11'", "9"]),
        ("01100", ["0", "11", "9"]),
    ];
    let totally_ramified: Vec<(&str, [&str; 3])> = rows.clone();
    rows.push(("00010", ["I", "0", "0"]));
    // the unramified twist by [00010]
    const TWISTS: [&str; 15] = [
        "00011", "00110", "10010", "10111", "00111", "10011", "10110", "11010", "01010", "11011", "11110", "01111",
        "11111", "01011", "01110",
    ];
    for ((_, v), s) in totally_ramified.iter().zip(TWISTS) {
        rows.push((s, ["I", v[1], v[2]]));
    }
    rows
}

/// One row of the table over F2.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HondaRow {
    pub s: String,
    pub conductor: u64,
    pub conductor_from_chi: u64,
    pub decomposition_order: u64,
    pub chi: [String; 3],
}

pub fn honda_table() -> Result<Vec<HondaRow>> {
    (0..32u32)
        .map(|b| {
            let s = HondaParam::from_index(b);
            let chi = chi_table(&s)?;
            Ok(HondaRow {
                s: bits_str(b),
                conductor: conductor_classify(&s, 2)?.exponent,
                conductor_from_chi: chi.conductor(),
                decomposition_order: if b == 0 { 1 } else { chi.decomposition_order() },
                chi: chi.labels(),
            })
        })
        .collect()
}

pub fn honda_table_csv(rows: &[HondaRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["s", "conductor", "decomposition_order", "chi_g0", "chi_g1", "chi_g2"])
        .map_err(|e| Error::Parse(e.to_string()))?;
    for r in rows {
        w.write_record([
            r.s.clone(),
            r.conductor.to_string(),
            r.decomposition_order.to_string(),
            r.chi[0].clone(),
            r.chi[1].clone(),
            r.chi[2].clone(),
        ])
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?).map_err(|e| Error::Parse(e.to_string()))
}

/// Sizes of the classes `(f=2, |D|=16)`, `(f=4, |D|=16)`, `(f=4, |D|=256)`, `chi(g0) = I`, `s = 0`.
pub fn partition_sizes(rows: &[HondaRow]) -> [usize; 5] {
    let mut out = [0; 5];
    for r in rows {
        let idx = if r.s == "00000" {
            4
        } else if r.chi[0] == "I" {
            3
        } else {
            match (r.conductor, r.decomposition_order) {
                (2, 16) => 0,
                (4, 16) => 1,
                (4, 256) => 2,
                _ => continue,
            }
        };
        out[idx] += 1;
    }
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Prolongation {
    Prolongs { s: String },
    Obstructed,
}

/// Whether a global corner triple with `chi(g0) = 0` matches some local `chi_s`.
pub fn prolongation_decision(chi: &CornerTriple) -> Result<Prolongation> {
    if chi.g0 != 0 {
        return Err(Error::Precondition("chi(g0) must vanish".into()));
    }
    let mut found = vec![];
    for b in 0..32u32 {
        let c = chi_table(&HondaParam::from_index(b))?;
        if c.g0 == 0 && c.g1 == chi.g1 && c.g2 == chi.g2 {
            found.push(b);
        }
    }
    match found.as_slice() {
        [] => Ok(Prolongation::Obstructed),
        [b] => Ok(Prolongation::Prolongs { s: bits_str(*b) }),
        _ => Err(Error::Inconsistent("several parameters share one corner triple".into())),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExtDecision {
    pub vanishes: bool,
    pub trail: Vec<String>,
}

/// `Ext^1 = 0` for the exponent-2 extensions of `E` by itself, from the ray-class data of the
/// pair resolvent; `cond4` is whether the unique quadratic extension has conductor exponent 4.
pub fn ext_vanishing_decision(
    amiable: bool,
    rk2: Option<usize>,
    rk4: Option<usize>,
    cond4: Option<bool>,
) -> Result<ExtDecision> {
    let mut trail = vec![];
    let vanishes = match (rk2, rk4) {
        (_, None) | (None, _) => {
            trail.push("no ray-class data: K is totally real, so the field is not amiable".into());
            false
        }
        (Some(r2), _) if r2 > 0 => {
            trail.push(format!(
                "rk2 = {r2}: a quadratic extension of conductor at most 2 gives a G_a-class that prolongs"
            ));
            false
        }
        (_, Some(0)) => {
            trail.push("rk4 = 0: Omega_K = K, so there is no G_a-class with a in {4, 5, 9}".into());
            trail.push("a G_11 or G_15 class would yield a G_5 class, hence a quadratic extension of K".into());
            true
        }
        (_, Some(1)) => {
            if cond4 == Some(true) {
                trail.push("rk4 = 1 with conductor 4: the G_a-class has chi(g2) = gamma_a, which is not gamma_9, so it does not prolong".into());
                true
            } else {
                trail.push("rk4 = 1 with conductor at most 2: the G_a-class prolongs".into());
                false
            }
        }
        (_, Some(r4)) => {
            trail.push(format!("rk4 = {r4}: two G_a-classes with a, a' in {{4, 5}} have a Baer sum that prolongs"));
            false
        }
    };
    if vanishes != amiable {
        return Err(Error::Inconsistent(format!("ray-class data gives {vanishes}, amiability flag is {amiable}")));
    }
    Ok(ExtDecision { vanishes, trail })
}

/// Kummer generators of the fiber field over `P` for the parameters where they are known, as text.
pub fn kummer_symbol(s: &HondaParam) -> Result<Option<String>> {
    let b = bits_of(s)?;
    if b == 0b10000 {
        return Ok(Some("1+2*pi^4".into()));
    }
    let (s1, s2, s3, s5) = (b >> 4 & 1, b >> 3 & 1, b >> 2 & 1, b & 1);
    if s1 == s2 {
        return Ok(Some(format!("1+2*{s2}*pi^2+2*{}*pi^4", (s3 + s5) % 2)));
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct HondaCertificate {
    pub rows: Vec<HondaRow>,
    pub partition: [usize; 5],
    pub claims: Vec<Claim>,
    pub passed: bool,
}

fn all_params(k: &FiniteField) -> impl Iterator<Item = HondaParam> + '_ {
    let q = k.order();
    (0..q.pow(5)).map(move |mut i| {
        let s = (0..5)
            .map(|_| {
                let x = k.from_index(i % q);
                i /= q;
                x
            })
            .collect();
        HondaParam::new(k, s).unwrap()
    })
}

/// Checks the systems, the corner tables, the partition and the classifier bound.
pub fn honda_certificate() -> Result<HondaCertificate> {
    let claim = |name: &str, passed: bool, detail: String| Claim { name: name.into(), passed, detail };
    let mut claims = vec![];
    let k = FiniteField::new(2, 1)?;
    let one = k.one();
    let mut bad = vec![];
    for b in 0..32 {
        let s = HondaParam::from_index(b);
        let ok = extension_system(&one, &s).and_then(|w| recovers_simple(&one, &w)).unwrap_or(false);
        if !ok {
            bad.push(s.to_string());
        }
    }
    claims.push(claim(
        "all 32 parameters over F2 give Honda systems with simple sub and quotient",
        bad.is_empty(),
        bad.join(" "),
    ));
    let mut mism = vec![];
    for (s, v) in pinned_chi_tables() {
        let chi = chi_table(&HondaParam::from_bits(s)?)?;
        if chi.labels() != v.map(String::from) {
            mism.push(s);
        }
    }
    claims.push(claim(
        "chi tables agree with the pinned table at all 31 nonzero parameters",
        mism.is_empty(),
        mism.join(" "),
    ));
    let rows = honda_table()?;
    let partition = partition_sizes(&rows);
    claims.push(claim("partition sizes are (7, 2, 6, 16, 1)", partition == [7, 2, 6, 16, 1], format!("{partition:?}")));
    let disagree: Vec<&str> =
        rows.iter().filter(|r| r.conductor != r.conductor_from_chi).map(|r| r.s.as_str()).collect();
    claims.push(claim("classifier agrees with the conductor read from chi", disagree.is_empty(), disagree.join(" ")));
    for p in [2u64, 3, 5] {
        let kp = FiniteField::new(p, 1)?;
        let mut worst = 0;
        for s in all_params(&kp) {
            worst = worst.max(conductor_classify(&s, p)?.exponent);
        }
        claims.push(claim(
            &format!("classifier never exceeds p^2 for p = {p}"),
            worst <= p * p,
            format!("max {worst}"),
        ));
    }
    let passed = claims.iter().all(|c| c.passed);
    Ok(HondaCertificate { rows, partition, claims, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FiniteField {
        FiniteField::new(2, 1).unwrap()
    }

    #[test]
    fn simple_and_extension() {
        let k = f2();
        let one = k.one();
        let e = simple_system(&k, &one).unwrap();
        assert!(e.check().all());
        assert!(simple_system(&k, &k.zero()).is_err());
        let s = HondaParam::from_bits("10000").unwrap();
        let w = extension_system(&one, &s).unwrap();
        assert_eq!(w.v[5][4], one);
        assert_eq!(w.v[3][4], one);
        assert_eq!(w.f[2][5], one);
        assert!(recovers_simple(&one, &w).unwrap());
        for b in 0..32 {
            let s = HondaParam::from_index(b);
            assert!(extension_system(&one, &s).unwrap().check().all());
        }
    }

    #[test]
    fn classes_of_lambda() {
        assert_eq!(lambda_classes(&f2(), 2).unwrap(), 1);
        assert_eq!(lambda_classes(&FiniteField::new(2, 4).unwrap(), 2).unwrap(), 15);
        assert_eq!(lambda_classes(&FiniteField::new(2, 2).unwrap(), 2).unwrap(), 3);
        assert!(lambda_classes(&f2(), 3).is_err());
    }

    #[test]
    fn classifier_examples() {
        let c = |b: &str| conductor_classify(&HondaParam::from_bits(b).unwrap(), 2).unwrap();
        assert_eq!(c("11000").exponent, 4);
        assert_eq!(c("10000").exponent, 2);
        assert_eq!(c("00010").exponent, 0);
        assert_eq!(c("00010").tag, RamificationTag::UnramifiedDegreeAtMostP);
        assert_eq!(c("00000").tag, RamificationTag::Trivial);
    }

    #[test]
    fn fa_forms() {
        let fa = f_a_polynomial(&HondaParam::from_bits("00010").unwrap(), 2).unwrap();
        assert_eq!(fa.text, "Z^16 - Z + s4");
        assert_eq!(f_a_polynomial(&HondaParam::from_bits("00000").unwrap(), 2).unwrap().text, "Z^16 - Z");
        let nested = f_a_polynomial(&HondaParam::from_bits("10000").unwrap(), 2).unwrap();
        assert!(nested.nested);
        assert!(nested.text.starts_with("[(Z^2 - 2*lambda^-2*eps*a^-6)^2 - 2^1*Z^4]^4"));
    }

    #[test]
    fn ords() {
        let o = ord_table(2).unwrap();
        assert_eq!(o.t, 5);
        assert_eq!(o.ord_b, BigRational::new(3.into(), 5.into()));
        let o = ord_table(3).unwrap();
        assert_eq!(o.t, 20);
        assert_eq!(o.ord_b, BigRational::new(7.into(), 20.into()));
        assert_eq!(o.ord_c, BigRational::new(9.into(), 20.into()));
    }

    #[test]
    fn tables() {
        for (s, v) in pinned_chi_tables() {
            let chi = chi_table(&HondaParam::from_bits(s).unwrap()).unwrap();
            assert_eq!(chi.labels(), v.map(String::from), "{s}");
            assert!(chi.is_valid());
        }
        let rows = honda_table().unwrap();
        assert_eq!(partition_sizes(&rows), [7, 2, 6, 16, 1]);
        assert!(rows.iter().all(|r| r.conductor == r.conductor_from_chi));
    }

    #[test]
    fn prolongation() {
        let t = |a, b, c| CornerTriple::from_labels(a, b, c).unwrap();
        assert_eq!(prolongation_decision(&t("0", "11", "0")).unwrap(), Prolongation::Prolongs { s: "10100".into() });
        assert_eq!(prolongation_decision(&t("0", "5", "9")).unwrap(), Prolongation::Prolongs { s: "11101".into() });
        assert_eq!(prolongation_decision(&t("0", "0", "5")).unwrap(), Prolongation::Obstructed);
        assert!(prolongation_decision(&t("I", "0", "0")).is_err());
    }

    #[test]
    fn ext_decisions() {
        assert!(ext_vanishing_decision(true, Some(0), Some(0), None).unwrap().vanishes);
        assert!(!ext_vanishing_decision(false, Some(1), Some(2), None).unwrap().vanishes);
        assert!(ext_vanishing_decision(true, Some(0), Some(1), Some(true)).unwrap().vanishes);
        assert!(ext_vanishing_decision(true, Some(1), Some(1), None).is_err());
    }

    #[test]
    fn certificate() {
        let c = honda_certificate().unwrap();
        assert!(c.passed, "{:?}", c.claims);
    }
}
