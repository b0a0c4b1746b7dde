//! Exact coefficient field: rational functions in a finite set of formal
//! parameters, with big-integer rational coefficients.
//!
//! A [`ParamScalar`] is a reduced fraction of multivariate polynomials.
//! Canonical form: numerator and denominator share no factor and the
//! denominator is monic with respect to the graded-lexicographic term order,
//! so equality is structural.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::EvalError;

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Power product of parameters, e.g. `alpha^2 * c221`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamMono(pub(crate) BTreeMap<String, u32>);

impl ParamMono {
    pub fn one() -> Self {
        ParamMono(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        ParamMono(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (k, v) in &other.0 {
            *m.entry(k.clone()).or_insert(0) += v;
        }
        ParamMono(m)
    }

    /// Exact monomial quotient, if every exponent of `other` fits.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut m = self.0.clone();
        for (k, v) in &other.0 {
            let e = m.get_mut(k)?;
            if *e < *v {
                return None;
            }
            *e -= v;
            if *e == 0 {
                m.remove(k);
            }
        }
        Some(ParamMono(m))
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        *self.0.get(var).unwrap_or(&0)
    }
}

impl Ord for ParamMono {
    /// Graded lexicographic: total degree first, then variable-wise lex.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let mut a = self.0.iter();
                let mut b = other.0.iter();
                loop {
                    match (a.next(), b.next()) {
                        (None, None) => return Ordering::Equal,
                        // Fewer remaining factors on an earlier variable means
                        // a *higher* power of a later variable; lex on the
                        // (name, exponent) stream is still a total order.
                        (None, Some(_)) => return Ordering::Less,
                        (Some(_), None) => return Ordering::Greater,
                        (Some((na, ea)), Some((nb, eb))) => {
                            match na.cmp(nb).then(ea.cmp(eb)) {
                                Ordering::Equal => continue,
                                o => return o,
                            }
                        }
                    }
                }
            })
    }
}

impl PartialOrd for ParamMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamMono, Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = ParamPoly::zero();
        if !c.is_zero() {
            p.terms.insert(ParamMono::one(), c);
        }
        p
    }

    pub fn param(name: &str) -> Self {
        let mut p = ParamPoly::zero();
        p.terms.insert(ParamMono::var(name), Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ParamMono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMono, &Rat)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&ParamMono::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, m: ParamMono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        r
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = ParamPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&ParamMono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            for v in m.0.keys() {
                s.insert(v.clone());
            }
        }
        s
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms.keys().map(|m| m.degree_in(var)).max().unwrap_or(0)
    }

    pub fn eval(&self, bind: &BTreeMap<String, Rat>) -> Result<Rat, EvalError> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let val = bind
                    .get(v)
                    .ok_or_else(|| EvalError::UnboundParam(v.clone()))?;
                for _ in 0..*e {
                    t *= val;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute a subset of the parameters by rationals.
    pub fn bind(&self, bind: &BTreeMap<String, Rat>) -> Self {
        let mut r = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = BTreeMap::new();
            for (v, e) in &m.0 {
                if let Some(val) = bind.get(v) {
                    for _ in 0..*e {
                        coeff *= val;
                    }
                } else {
                    rest.insert(v.clone(), *e);
                }
            }
            r.add_term(ParamMono(rest), coeff);
        }
        r
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut q = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(dm)?;
            let qc = &rc / dc;
            let mut t = ParamPoly::zero();
            t.terms.insert(qm, qc);
            q = q.add(&t);
            rem = rem.sub(&d.mul(&t));
        }
        Some(q)
    }

    fn monic(&self) -> Self {
        match self.leading() {
            None => ParamPoly::zero(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.mul_rat(&inv)
            }
        }
    }

    /// Coefficients with respect to one variable; index = power.
    fn univar_coeffs(&self, var: &str) -> Vec<ParamPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![ParamPoly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.degree_in(var) as usize;
            let mut rest = m.0.clone();
            rest.remove(var);
            out[e].add_term(ParamMono(rest), c.clone());
        }
        out
    }

    fn from_univar(var: &str, coeffs: &[ParamPoly]) -> Self {
        let mut r = ParamPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                let mut mm = m.0.clone();
                if e > 0 {
                    mm.insert(var.to_string(), e as u32);
                }
                r.add_term(ParamMono(mm), k.clone());
            }
        }
        r
    }

    /// Monic GCD over the rationals (primitive PRS, recursing over variables).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut vars = a.vars();
        vars.extend(b.vars());
        match vars.iter().next_back().cloned() {
            None => ParamPoly::one(),
            Some(v) => {
                let ca = a.univar_coeffs(&v);
                let cb = b.univar_coeffs(&v);
                let cont_a = content(&ca);
                let cont_b = content(&cb);
                let cont = ParamPoly::gcd(&cont_a, &cont_b);
                let mut p = divide_all(&ca, &cont_a);
                let mut q = divide_all(&cb, &cont_b);
                if deg(&p) < deg(&q) {
                    std::mem::swap(&mut p, &mut q);
                }
                while !is_zero_vec(&q) {
                    let r = prem(&p, &q);
                    p = q;
                    let cr = content(&r);
                    q = if is_zero_vec(&r) { r } else { divide_all(&r, &cr) };
                }
                let pp = ParamPoly::from_univar(&v, &p);
                cont.mul(&pp).monic()
            }
        }
    }

    /// Rational roots of a univariate polynomial in `var`.
    pub fn rational_roots(&self, var: &str) -> Vec<Rat> {
        let coeffs = self.univar_coeffs(var);
        let mut int_coeffs = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            match c.as_constant() {
                Some(r) => int_coeffs.push(r),
                None => return Vec::new(), // more than one parameter involved
            }
        }
        let mut lcm = BigInt::one();
        for c in &int_coeffs {
            lcm = num_integer::lcm_bigint(&lcm, c.denom());
        }
        let ints: Vec<BigInt> = int_coeffs.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let mut roots = Vec::new();
        let mut work = ints;
        // strip zero roots
        while work.len() > 1 && work[0].is_zero() {
            if !roots.contains(&Rat::zero()) {
                roots.push(Rat::zero());
            }
            work.remove(0);
        }
        if work.len() < 2 {
            roots.sort();
            return roots;
        }
        let a0 = work[0].abs();
        let an = work.last().unwrap().abs();
        let limit = BigInt::from(1_000_000_000u64);
        if a0 > limit || an > limit {
            return roots;
        }
        let eval_at = |ints: &[BigInt], r: &Rat| -> bool {
            let mut acc = Rat::zero();
            let mut pw = Rat::one();
            for c in ints {
                acc += Rat::from_integer(c.clone()) * pw.clone();
                pw *= r;
            }
            acc.is_zero()
        };
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                    if !roots.contains(&cand) && eval_at(&work, &cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

mod num_integer {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    pub fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
        let mut a = a.abs();
        let mut b = b.abs();
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm_bigint(a: &BigInt, b: &BigInt) -> BigInt {
        if a.is_zero() || b.is_zero() {
            return BigInt::zero();
        }
        (a / gcd_bigint(a, b)) * b
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    use num_traits::ToPrimitive;
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let nn = match n.to_u64() {
        Some(v) => v,
        None => return vec![BigInt::one(), n],
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= nn {
        if nn % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(nn / d));
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn deg(v: &[ParamPoly]) -> isize {
    for i in (0..v.len()).rev() {
        if !v[i].is_zero() {
            return i as isize;
        }
    }
    -1
}

fn is_zero_vec(v: &[ParamPoly]) -> bool {
    deg(v) < 0
}

fn trim(mut v: Vec<ParamPoly>) -> Vec<ParamPoly> {
    while v.len() > 1 && v.last().map(|p| p.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn content(v: &[ParamPoly]) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in v {
        if !c.is_zero() {
            g = ParamPoly::gcd(&g, c);
        }
    }
    if g.is_zero() {
        ParamPoly::one()
    } else {
        g
    }
}

fn divide_all(v: &[ParamPoly], d: &ParamPoly) -> Vec<ParamPoly> {
    trim(
        v.iter()
            .map(|c| {
                if c.is_zero() {
                    ParamPoly::zero()
                } else {
                    c.div_exact(d).expect("content divides")
                }
            })
            .collect(),
    )
}

/// Pseudo-remainder of `a` by `b` as univariate coefficient vectors.
fn prem(a: &[ParamPoly], b: &[ParamPoly]) -> Vec<ParamPoly> {
    let db = deg(b);
    debug_assert!(db >= 0);
    let lcb = b[db as usize].clone();
    let mut r: Vec<ParamPoly> = a.to_vec();
    loop {
        let dr = deg(&r);
        if dr < db || dr < 0 {
            break;
        }
        let lr = r[dr as usize].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lcb);
        }
        let shift = (dr - db) as usize;
        for i in 0..=(db as usize) {
            r[shift + i] = r[shift + i].sub(&lr.mul(&b[i]));
        }
        r = trim(r);
        if is_zero_vec(&r) {
            break;
        }
    }
    r
}

/// Element of the field of rational functions in the parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamScalar {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamScalar {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return ParamScalar {
                num: ParamPoly::zero(),
                den: ParamPoly::one(),
            };
        }
        let g = ParamPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero").1.clone();
        let inv = Rat::one() / lc;
        num = num.mul_rat(&inv);
        den = den.mul_rat(&inv);
        ParamScalar { num, den }
    }

    pub fn zero() -> Self {
        ParamScalar {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        ParamScalar {
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        ParamScalar {
            num: ParamPoly::constant(c),
            den: ParamPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn param(name: &str) -> Self {
        ParamScalar {
            num: ParamPoly::param(name),
            den: ParamPoly::one(),
        }
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamScalar {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        ParamScalar::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ParamScalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar {
            num: self.num.mul_rat(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        ParamScalar::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut r = ParamScalar::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        r
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn eval(&self, bind: &BTreeMap<String, Rat>) -> Result<Rat, EvalError> {
        let d = self.den.eval(bind)?;
        if d.is_zero() {
            return Err(EvalError::ParamSingular(format!("{}", self.den)));
        }
        Ok(self.num.eval(bind)? / d)
    }

    /// Substitute a subset of the parameters, keeping the rest symbolic.
    pub fn bind(&self, bind: &BTreeMap<String, Rat>) -> Result<Self, EvalError> {
        let den = self.den.bind(bind);
        if den.is_zero() {
            return Err(EvalError::ParamSingular(format!("{}", self.den)));
        }
        Ok(ParamScalar::new(self.num.bind(bind), den))
    }

    /// Split a scalar that is affine in the given unknowns into its constant
    /// part and the coefficient of each unknown. The denominator must be free
    /// of unknowns and no term may have unknown-degree above one.
    pub fn decompose_affine(
        &self,
        unknowns: &BTreeSet<String>,
    ) -> Option<(ParamScalar, Vec<(String, ParamScalar)>)> {
        for v in self.den.vars() {
            if unknowns.contains(&v) {
                return None;
            }
        }
        let mut constant = ParamPoly::zero();
        let mut linear: BTreeMap<String, ParamPoly> = BTreeMap::new();
        for (m, c) in self.num.terms() {
            let mut found: Option<&str> = None;
            for (v, e) in &m.0 {
                if unknowns.contains(v) {
                    if found.is_some() || *e > 1 {
                        return None;
                    }
                    found = Some(v);
                }
            }
            match found {
                None => constant.add_term(m.clone(), c.clone()),
                Some(u) => {
                    let mut rest = m.0.clone();
                    rest.remove(u);
                    linear
                        .entry(u.to_string())
                        .or_insert_with(ParamPoly::zero)
                        .add_term(ParamMono(rest), c.clone());
                }
            }
        }
        let den = self.den.clone();
        Some((
            ParamScalar::new(constant, den.clone()),
            linear
                .into_iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(u, p)| (u, ParamScalar::new(p, den.clone())))
                .collect(),
        ))
    }
}

impl fmt::Display for ParamMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> ParamPoly {
        ParamPoly::param(name)
    }

    #[test]
    fn gcd_reduces_fractions() {
        // (a^2 - 1) / (a - 1) = a + 1
        let a = p("a");
        let num = a.mul(&a).sub(&ParamPoly::one());
        let den = a.sub(&ParamPoly::one());
        let s = ParamScalar::new(num, den);
        let expected = ParamScalar::from_poly(a.add(&ParamPoly::one()));
        assert_eq!(s, expected);
    }

    #[test]
    fn multivariate_gcd() {
        // gcd(a*b + b, b^2) = b
        let ab = p("a").mul(&p("b")).add(&p("b"));
        let b2 = p("b").mul(&p("b"));
        let g = ParamPoly::gcd(&ab, &b2);
        assert_eq!(g, p("b"));
    }

    #[test]
    fn canonical_equality() {
        // 2a/2 == a and (a/b) * (b/a) == 1
        let two_a = p("a").mul_rat(&rat_int(2));
        let s = ParamScalar::new(two_a, ParamPoly::constant(rat_int(2)));
        assert_eq!(s, ParamScalar::param("a"));
        let ab = ParamScalar::new(p("a"), p("b"));
        assert!(ab.mul(&ab.inv()).is_one());
    }

    #[test]
    fn affine_decomposition() {
        // 3*u0*a + 2*u1 + 5  ->  const 5, {u0: 3a, u1: 2}
        let expr = ParamScalar::from_poly(
            p("u0")
                .mul(&p("a"))
                .mul_rat(&rat_int(3))
                .add(&p("u1").mul_rat(&rat_int(2)))
                .add(&ParamPoly::constant(rat_int(5))),
        );
        let unknowns: BTreeSet<String> = ["u0".to_string(), "u1".to_string()].into();
        let (c, lin) = expr.decompose_affine(&unknowns).unwrap();
        assert_eq!(c, ParamScalar::from_int(5));
        assert_eq!(lin.len(), 2);
        assert_eq!(lin[0].0, "u0");
        assert_eq!(lin[0].1, ParamScalar::param("a").mul_rat(&rat_int(3)));
    }

    #[test]
    fn rational_roots() {
        // 2a^2 - a  has roots 0, 1/2
        let poly = p("a").mul(&p("a")).mul_rat(&rat_int(2)).sub(&p("a"));
        let roots = poly.rational_roots("a");
        assert_eq!(roots, vec![Rat::zero(), rat(1, 2)]);
    }

    #[test]
    fn rational_roots_none_for_case1_determinant() {
        // a^8 + 12a^6 + 30a^4 + 28a^2 + 9 has no rational roots
        let a2 = p("a").pow(2);
        let poly = a2
            .pow(4)
            .add(&a2.pow(3).mul_rat(&rat_int(12)))
            .add(&a2.pow(2).mul_rat(&rat_int(30)))
            .add(&a2.mul_rat(&rat_int(28)))
            .add(&ParamPoly::constant(rat_int(9)));
        assert!(poly.rational_roots("a").is_empty());
    }
}
