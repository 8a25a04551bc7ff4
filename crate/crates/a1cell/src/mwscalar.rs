//! The formal coefficient algebra of differential entries: Z-linear
//! combinations of atoms `<d> * eta^e` (square class `d`, eta-power `e`)
//! subject to the Grothendieck-Witt level relations
//!
//! ```text
//! <d><d'> = <dd'>,   eta<-1> = -eta   (equivalently eta*h = 0, h = 1 + <-1>)
//! ```
//!
//! plus integer realizations (real: eta = 2; complex points / Milnor: eta = 0)
//! and the torsion-reduction rule used by the kernel solver (`<d>` acts as 1
//! on eta-torsion elements, any positive eta-power acts as 0).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A named unit symbol: the distinguished unit `-1` or a formal unit `tau_k`
/// introduced by a change of reduced expression.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum UnitSymbol {
    MinusOne,
    Tau(u32),
}

impl fmt::Display for UnitSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitSymbol::MinusOne => write!(f, "-1"),
            UnitSymbol::Tau(k) => write!(f, "tau{k}"),
        }
    }
}

/// An element of the F2-vector space on unit symbols: a square class.
/// The empty class is the neutral element `<1>`; multiplication is symmetric
/// difference (each `d*d` is a square and vanishes).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct SquareClass(BTreeSet<UnitSymbol>);

impl SquareClass {
    pub fn one() -> Self {
        SquareClass(BTreeSet::new())
    }

    pub fn unit(s: UnitSymbol) -> Self {
        SquareClass(BTreeSet::from([s]))
    }

    pub fn minus_one() -> Self {
        Self::unit(UnitSymbol::MinusOne)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: UnitSymbol) -> bool {
        self.0.contains(&s)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &UnitSymbol> {
        self.0.iter()
    }

    /// Product of square classes: symmetric difference of supports.
    pub fn class_mul(&self, other: &SquareClass) -> SquareClass {
        let mut out = self.0.clone();
        for s in &other.0 {
            if !out.remove(s) {
                out.insert(*s);
            }
        }
        SquareClass(out)
    }

    fn without_minus_one(&self) -> SquareClass {
        let mut out = self.0.clone();
        out.remove(&UnitSymbol::MinusOne);
        SquareClass(out)
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        if self.0.is_empty() {
            write!(f, "1")?;
        } else {
            for (k, s) in self.0.iter().enumerate() {
                if k > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{s}")?;
            }
        }
        write!(f, ">")
    }
}

/// An atom `<d> * eta^e` in normal form: if `e >= 1` the class `d` never
/// contains `-1` (rewritten away via `eta<-1> = -eta`).
pub type Atom = (u32, SquareClass);

/// A formal Z-linear combination of atoms, kept in normal form
/// (no zero coefficients, no `-1` inside a class multiplied by eta).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MWScalar {
    terms: BTreeMap<Atom, i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombineMode {
    Add,
    Mul,
}

impl MWScalar {
    pub fn zero() -> Self {
        MWScalar::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(0, SquareClass::one(), n);
        s
    }

    /// The Hopf-map scalar eta (weight +1).
    pub fn eta() -> Self {
        let mut s = Self::zero();
        s.add_term(1, SquareClass::one(), 1);
        s
    }

    /// The rank-one form `<d>` of a square class.
    pub fn bracket(d: SquareClass) -> Self {
        let mut s = Self::zero();
        s.add_term(0, d, 1);
        s
    }

    /// The hyperbolic element h = 1 + <-1>; satisfies eta*h = 0.
    pub fn h() -> Self {
        let mut s = Self::from_int(1);
        s.add_term(0, SquareClass::minus_one(), 1);
        s
    }

    /// eps = -<-1>, the sign of the argument swap on weight-2 generators.
    pub fn eps() -> Self {
        let mut s = Self::zero();
        s.add_term(0, SquareClass::minus_one(), -1);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &i64)> {
        self.terms.iter()
    }

    /// Largest eta-exponent among atoms (None when zero).
    pub fn max_eta_exponent(&self) -> Option<u32> {
        self.terms.keys().map(|(e, _)| *e).max()
    }

    /// Smallest eta-exponent among atoms (None when zero).
    pub fn min_eta_exponent(&self) -> Option<u32> {
        self.terms.keys().map(|(e, _)| *e).min()
    }

    /// All unit symbols occurring in any atom.
    pub fn symbols(&self) -> BTreeSet<UnitSymbol> {
        let mut out = BTreeSet::new();
        for (_, d) in self.terms.keys() {
            out.extend(d.symbols().copied());
        }
        out
    }

    /// Add `c * <d> * eta^e`, normalizing on the fly.
    fn add_term(&mut self, e: u32, d: SquareClass, c: i64) {
        if c == 0 {
            return;
        }
        let (d, c) = if e >= 1 && d.contains(UnitSymbol::MinusOne) {
            (d.without_minus_one(), -c)
        } else {
            (d, c)
        };
        let key = (e, d);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for ((e, d), c) in &self.terms {
            out.add_term(*e, d.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for ((e, d), c) in &self.terms {
            out.add_term(*e, d.clone(), c * k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((e, d), c) in &other.terms {
            out.add_term(*e, d.clone(), *c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((e1, d1), c1) in &self.terms {
            for ((e2, d2), c2) in &other.terms {
                out.add_term(e1 + e2, d1.class_mul(d2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MWScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((e, d), c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != 1 || (d.is_one() && *e == 0) {
                parts.push(mag.to_string());
            }
            if !d.is_one() {
                parts.push(d.to_string());
            }
            match e {
                0 => {}
                1 => parts.push("eta".to_string()),
                _ => parts.push(format!("eta^{e}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// The single binary entry point of the algebra.
pub fn combine(a: &MWScalar, b: &MWScalar, mode: CombineMode) -> MWScalar {
    match mode {
        CombineMode::Add => a.add(b),
        CombineMode::Mul => a.mul(b),
    }
}

/// `n_eps = sum_{i=1..n} <(-1)^(i-1)>`: equals `k*h` for n = 2k and
/// `k*h + 1` for n = 2k+1. Satisfies `eta * n_eps(n) = (n mod 2) * eta`.
pub fn n_epsilon(n: i64) -> MWScalar {
    assert!(n >= 0, "n_epsilon requires n >= 0, got {n}");
    let mut s = MWScalar::zero();
    s.add_term(0, SquareClass::one(), (n + 1) / 2);
    s.add_term(0, SquareClass::minus_one(), n / 2);
    s
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealizationName {
    Real,
    ComplexTop,
    Milnor,
}

/// A sign assignment for formal tau symbols, mapping each to +1 or -1.
pub type SignAssignment = BTreeMap<UnitSymbol, i64>;

/// A ring-homomorphic specialization of the scalar algebra to the integers,
/// together with the rule deciding which weight groups survive.
///
/// * `real`: eta acts as multiplication by 2; `-1` has sign -1; every
///   weight realizes to Z; tau signs are free and must be supplied.
/// * `complexTop`: eta = 0; every weight >= 1 realizes to the zero group.
/// * `milnor`: eta = 0; every weight realizes to Z; all signs default to +1.
#[derive(Clone, Debug)]
pub struct Realization {
    pub name: RealizationName,
    pub eta_value: i64,
    pub signs: SignAssignment,
    /// Fallback sign for symbols not present in `signs`; `None` means a
    /// missing symbol is an error.
    pub default_sign: Option<i64>,
}

impl Realization {
    pub fn real() -> Self {
        Realization {
            name: RealizationName::Real,
            eta_value: 2,
            signs: BTreeMap::from([(UnitSymbol::MinusOne, -1)]),
            default_sign: None,
        }
    }

    pub fn complex_top() -> Self {
        Realization {
            name: RealizationName::ComplexTop,
            eta_value: 0,
            signs: BTreeMap::from([(UnitSymbol::MinusOne, 1)]),
            default_sign: Some(1),
        }
    }

    pub fn milnor() -> Self {
        Realization {
            name: RealizationName::Milnor,
            eta_value: 0,
            signs: BTreeMap::from([(UnitSymbol::MinusOne, 1)]),
            default_sign: Some(1),
        }
    }

    /// A copy with extra (overriding) sign assignments.
    pub fn with_signs(&self, extra: &SignAssignment) -> Self {
        let mut out = self.clone();
        for (s, v) in extra {
            assert!(
                *v == 1 || *v == -1,
                "sign for {s} must be +1 or -1, got {v}"
            );
            out.signs.insert(*s, *v);
        }
        out
    }

    /// Does weight `n` realize to the zero group?
    pub fn weight_group_is_zero(&self, weight: u32) -> bool {
        self.name == RealizationName::ComplexTop && weight >= 1
    }

    pub fn label(&self) -> &'static str {
        match self.name {
            RealizationName::Real => "real",
            RealizationName::ComplexTop => "complexTop",
            RealizationName::Milnor => "milnor",
        }
    }

    fn sign_of(&self, s: UnitSymbol) -> Result<i64, String> {
        if let Some(v) = self.signs.get(&s) {
            return Ok(*v);
        }
        self.default_sign
            .ok_or_else(|| format!("no sign assigned to unit symbol {s}"))
    }
}

/// Apply a realization to a scalar; fails naming the first unit symbol with
/// no sign assignment.
pub fn realize(s: &MWScalar, r: &Realization) -> Result<i64, String> {
    let mut total: i64 = 0;
    for ((e, d), c) in s.terms() {
        let mut v = *c;
        for _ in 0..*e {
            v *= r.eta_value;
        }
        for sym in d.symbols() {
            v *= r.sign_of(*sym)?;
        }
        total += v;
    }
    Ok(total)
}

/// The integer by which `s` acts on an eta-torsion module element: every
/// square class acts as 1 (hence h as 2, n_eps(n) as n) and any atom with a
/// positive eta-power acts as 0.
pub fn reduce_on_torsion(s: &MWScalar) -> i64 {
    s.terms().filter(|((e, _), _)| *e == 0).map(|(_, c)| c).sum()
}
