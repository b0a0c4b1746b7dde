//! Atoms and power products of the closed expression class.
//!
//! The class is generated by `x`, `y`, `(x-y)`, `rho = 1 + x^2 + y^2` and
//! exponentials `exp(r*x)` whose rate `r` is a parameter or an explicit
//! rational. It is closed under partial differentiation:
//!
//! ```text
//! dx x = 1        dy x = 0
//! dx y = 0        dy y = 1
//! dx (x-y) = 1    dy (x-y) = -1
//! dx rho = 2x     dy rho = 2y
//! dx exp(r*x) = r*exp(r*x)   dy exp(r*x) = 0
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{ParamScalar, Rat};
use crate::error::EvalError;

/// Rate of an exponential atom `exp(rate*x)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Rate {
    Param(String),
    Const(Rat),
}

impl Rate {
    pub fn scalar(&self) -> ParamScalar {
        match self {
            Rate::Param(p) => ParamScalar::param(p),
            Rate::Const(c) => ParamScalar::from_rat(c.clone()),
        }
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rate::Param(p) => write!(f, "{p}"),
            Rate::Const(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Atom {
    X,
    Y,
    XMinusY,
    Rho,
    Exp(Rate),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::X => write!(f, "x"),
            Atom::Y => write!(f, "y"),
            Atom::XMinusY => write!(f, "(x-y)"),
            Atom::Rho => write!(f, "rho"),
            Atom::Exp(Rate::Const(c)) if c.is_one() => write!(f, "exp(x)"),
            Atom::Exp(r) => write!(f, "exp({r}*x)"),
        }
    }
}

/// Power product of atoms with signed integer exponents. The map never stores
/// a zero exponent. Ordering is the derived lexicographic order on the entry
/// sequence; it is total and fixed, which is all canonical form requires.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<Atom, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn atom(a: Atom, e: i64) -> Self {
        let mut m = Monomial::one();
        m.set(a, e);
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, a: &Atom) -> i64 {
        *self.exps.get(a).unwrap_or(&0)
    }

    pub fn set(&mut self, a: Atom, e: i64) {
        if e == 0 {
            self.exps.remove(&a);
        } else {
            self.exps.insert(a, e);
        }
    }

    pub fn shift(&mut self, a: Atom, delta: i64) {
        let e = self.exponent(&a) + delta;
        self.set(a, e);
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (a, e) in &other.exps {
            r.shift(a.clone(), *e);
        }
        r
    }

    pub fn inv(&self) -> Self {
        Monomial {
            exps: self.exps.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        }
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&Atom, i64)> {
        self.exps.iter().map(|(a, e)| (a, *e))
    }

    pub fn exp_atoms(&self) -> Vec<(Rate, i64)> {
        self.exps
            .iter()
            .filter_map(|(a, e)| match a {
                Atom::Exp(r) => Some((r.clone(), *e)),
                _ => None,
            })
            .collect()
    }

    pub fn has_exp(&self) -> bool {
        self.exps.iter().any(|(a, _)| matches!(a, Atom::Exp(_)))
    }

    pub fn depends_on_x(&self) -> bool {
        self.exps.iter().any(|(a, _)| {
            matches!(a, Atom::X | Atom::XMinusY | Atom::Rho | Atom::Exp(_))
        })
    }

    pub fn depends_on_y(&self) -> bool {
        self.exps
            .iter()
            .any(|(a, _)| matches!(a, Atom::Y | Atom::XMinusY | Atom::Rho))
    }

    /// Atoms occurring with a negative exponent (domain restrictions).
    pub fn negative_atoms(&self) -> Vec<Atom> {
        self.exps
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(a, _)| a.clone())
            .collect()
    }

    /// Per-atom contributions of a partial derivative. Each entry is a
    /// (scalar factor, replacement monomial) pair; the derivative of
    /// `c * m` is the sum of `c * factor * m'` over the entries.
    pub fn differentiate(&self, wrt_x: bool) -> Vec<(ParamScalar, Monomial)> {
        let mut out = Vec::new();
        for (a, e) in &self.exps {
            let e = *e;
            let er = ParamScalar::from_int(e);
            match (a, wrt_x) {
                (Atom::X, true) | (Atom::Y, false) => {
                    let mut m = self.clone();
                    m.shift(a.clone(), -1);
                    out.push((er, m));
                }
                (Atom::X, false) | (Atom::Y, true) => {}
                (Atom::XMinusY, _) => {
                    let mut m = self.clone();
                    m.shift(Atom::XMinusY, -1);
                    let f = if wrt_x { er } else { er.neg() };
                    out.push((f, m));
                }
                (Atom::Rho, _) => {
                    // d rho = 2x dx + 2y dy
                    let mut m = self.clone();
                    m.shift(Atom::Rho, -1);
                    m.shift(if wrt_x { Atom::X } else { Atom::Y }, 1);
                    out.push((er.mul_rat(&super::scalar::rat_int(2).clone()), m));
                }
                (Atom::Exp(r), true) => {
                    out.push((er.mul(&r.scalar()), self.clone()));
                }
                (Atom::Exp(_), false) => {}
            }
        }
        out
    }

    /// Exact evaluation at a rational point. Exponential atoms are exact only
    /// when their argument vanishes (`x = 0` or rate zero exponent).
    pub fn eval_exact(&self, x: &Rat, y: &Rat) -> Result<Rat, EvalError> {
        let mut acc = Rat::one();
        for (a, e) in &self.exps {
            let base = match a {
                Atom::X => x.clone(),
                Atom::Y => y.clone(),
                Atom::XMinusY => x - y,
                Atom::Rho => Rat::one() + x * x + y * y,
                Atom::Exp(_) => {
                    if x.is_zero() {
                        Rat::one()
                    } else {
                        return Err(EvalError::NotExact(format!("{a} at x = {x}")));
                    }
                }
            };
            if base.is_zero() && *e < 0 {
                return Err(EvalError::EvalSingular(format!("{a} vanishes at ({x}, {y})")));
            }
            acc *= rat_pow(&base, *e)?;
        }
        Ok(acc)
    }

    /// Floating-point evaluation; rates must already be bound via `bind`.
    pub fn eval_f64(&self, x: f64, y: f64, bind: &BTreeMap<String, Rat>) -> Result<f64, EvalError> {
        let mut acc = 1.0f64;
        for (a, e) in &self.exps {
            let v = match a {
                Atom::X => x,
                Atom::Y => y,
                Atom::XMinusY => x - y,
                Atom::Rho => 1.0 + x * x + y * y,
                Atom::Exp(r) => {
                    let rv = match r {
                        Rate::Const(c) => c.to_f64().unwrap(),
                        Rate::Param(p) => bind
                            .get(p)
                            .ok_or_else(|| EvalError::UnboundParam(p.clone()))?
                            .to_f64()
                            .unwrap(),
                    };
                    (rv * x).exp()
                }
            };
            if v == 0.0 && *e < 0 {
                return Err(EvalError::EvalSingular(format!("{a} vanishes")));
            }
            acc *= v.powi(*e as i32);
        }
        Ok(acc)
    }
}

fn rat_pow(base: &Rat, e: i64) -> Result<Rat, EvalError> {
    if e == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() && e < 0 {
        return Err(EvalError::EvalSingular("zero base".into()));
    }
    let mut acc = Rat::one();
    let b = if e < 0 {
        Rat::one() / base.clone()
    } else {
        base.clone()
    };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    Ok(acc)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (a, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::scalar::rat_int;

    #[test]
    fn derivative_rules() {
        // d/dy (x-y)^-1 = (x-y)^-2
        let m = Monomial::atom(Atom::XMinusY, -1);
        let d = m.differentiate(false);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, ParamScalar::from_int(1));
        assert_eq!(d[0].1, Monomial::atom(Atom::XMinusY, -2));
    }

    #[test]
    fn exp_derivative_keeps_monomial() {
        let m = Monomial::atom(Atom::Exp(Rate::Param("alpha".into())), 2);
        let d = m.differentiate(true);
        assert_eq!(d.len(), 1);
        assert_eq!(
            d[0].0,
            ParamScalar::param("alpha").mul_rat(&rat_int(2))
        );
        assert_eq!(d[0].1, m);
    }

    #[test]
    fn exact_eval_singularities() {
        let m = Monomial::atom(Atom::XMinusY, -1);
        assert!(m.eval_exact(&rat_int(1), &rat_int(1)).is_err());
        assert_eq!(m.eval_exact(&rat_int(2), &rat_int(1)).unwrap(), rat_int(1));
    }
}
