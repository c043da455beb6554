//! Exact arithmetic in the circle R/Z.
//!
//! A `RotationNumber` is a rational in [0,1) plus a finite Q-linear
//! combination of declared independent irrationals. The basis declares the
//! irrationals by name together with high-precision decimal approximations;
//! Q-linear independence of the basis together with 1 is an assumption of
//! the configuration, not something we verify. Keeping coefficients exact
//! makes equality decidable; floats appear only at the simulation boundary.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::abelian::FgAbelianGroup;

#[derive(Debug, Error)]
pub enum CircleError {
    #[error("unknown irrational symbol `{0}` (basis mismatch)")]
    UnknownSymbol(String),
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("basis value `{0}` is not in the open interval (0,1)")]
    BasisValueOutOfRange(String),
    #[error("basis has {have} irrationals but {need} independent generators are required")]
    BasisExhausted { have: usize, need: usize },
    #[error("group does not embed densely in the circle: {0}")]
    NotEmbeddable(String),
}

/// Parses "p/q", "p", or a plain decimal like "0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, CircleError> {
    let s = s.trim();
    let bad = || CircleError::BadRational(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let neg = int.starts_with('-');
        let ip: BigInt = int.parse().map_err(|_| bad())?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let fp: BigInt = frac.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigRational::new(fp, den);
        let int_part = BigRational::from_integer(ip);
        return Ok(if neg { int_part - frac_part } else { int_part + frac_part });
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(p))
}

/// Formats a rational as "p/q" (or "p" when integral).
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn frac_mod_one(r: &BigRational) -> BigRational {
    let f = r.fract();
    if f.is_negative() {
        f + BigRational::one()
    } else {
        f
    }
}

/// Named irrationals declared Q-linearly independent together with 1.
/// Values are exact rationals read from 40-digit decimal strings; they
/// stand in for the true irrationals during numeric evaluation.
#[derive(Debug, Clone)]
pub struct IrrationalBasis {
    names: Vec<String>,
    values: Vec<BigRational>,
    decimals: Vec<String>,
}

/// Default basis: sqrt(2)-1, sqrt(3)-1, pi-3, sqrt(5)-2, sqrt(6)-2,
/// sqrt(7)-2, sqrt(10)-3, sqrt(11)-3, truncated to 40 decimal digits.
const DEFAULT_BASIS: &[(&str, &str)] = &[
    ("alpha1", "0.4142135623730950488016887242096980785696"),
    ("alpha2", "0.7320508075688772935274463415058723669428"),
    ("alpha3", "0.1415926535897932384626433832795028841971"),
    ("alpha4", "0.2360679774997896964091736687312762354406"),
    ("alpha5", "0.4494897427831780981972840747058913919659"),
    ("alpha6", "0.6457513110645905905016157536392604257102"),
    ("alpha7", "0.1622776601683793319988935444327185337195"),
    ("alpha8", "0.3166247903553998491149327366706866839270"),
];

impl IrrationalBasis {
    pub fn new(entries: &[(String, String)]) -> Result<Self, CircleError> {
        let mut names = Vec::new();
        let mut values = Vec::new();
        let mut decimals = Vec::new();
        for (name, dec) in entries {
            let v = parse_rational(dec)?;
            if !(v.is_positive() && v < BigRational::one()) {
                return Err(CircleError::BasisValueOutOfRange(dec.clone()));
            }
            names.push(name.clone());
            values.push(v);
            decimals.push(dec.clone());
        }
        Ok(IrrationalBasis { names, values, decimals })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn decimals(&self) -> &[String] {
        &self.decimals
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn value_of(&self, name: &str) -> Result<&BigRational, CircleError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.values[i])
            .ok_or_else(|| CircleError::UnknownSymbol(name.to_string()))
    }
}

impl Default for IrrationalBasis {
    fn default() -> Self {
        let entries: Vec<(String, String)> =
            DEFAULT_BASIS.iter().map(|(n, d)| (n.to_string(), d.to_string())).collect();
        IrrationalBasis::new(&entries).expect("default basis is valid")
    }
}

/// An element of R/Z in canonical form: rational part reduced to [0,1),
/// zero irrational coefficients absent. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationNumber {
    rational: BigRational,
    coeffs: BTreeMap<String, BigRational>,
}

/// Order of a circle element: finite (the denominator of its rational part)
/// or infinite as soon as an irrational coefficient is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Debug for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rational.is_zero() || self.coeffs.is_empty() {
            parts.push(rational_string(&self.rational));
        }
        for (name, c) in &self.coeffs {
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("{}*{}", rational_string(c), name));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl RotationNumber {
    fn canonical(rational: BigRational, coeffs: BTreeMap<String, BigRational>) -> Self {
        let coeffs: BTreeMap<_, _> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        RotationNumber { rational: frac_mod_one(&rational), coeffs }
    }

    pub fn zero() -> Self {
        RotationNumber { rational: BigRational::zero(), coeffs: BTreeMap::new() }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::canonical(r, BTreeMap::new())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The rotation by one whole basis irrational.
    pub fn basis_generator(name: &str) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), BigRational::one());
        RotationNumber { rational: BigRational::zero(), coeffs }
    }

    pub fn with_parts(rational: BigRational, coeffs: BTreeMap<String, BigRational>) -> Self {
        Self::canonical(rational, coeffs)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn coeffs(&self) -> &BTreeMap<String, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &RotationNumber) -> RotationNumber {
        let mut coeffs = self.coeffs.clone();
        for (name, c) in &other.coeffs {
            let entry = coeffs.entry(name.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        Self::canonical(&self.rational + &other.rational, coeffs)
    }

    pub fn negate(&self) -> RotationNumber {
        let coeffs = self.coeffs.iter().map(|(n, c)| (n.clone(), -c)).collect();
        Self::canonical(-&self.rational, coeffs)
    }

    pub fn sub(&self, other: &RotationNumber) -> RotationNumber {
        self.add(&other.negate())
    }

    pub fn scalar_mul(&self, n: i64) -> RotationNumber {
        let factor = BigRational::from_integer(BigInt::from(n));
        let coeffs = self.coeffs.iter().map(|(nm, c)| (nm.clone(), c * &factor)).collect();
        Self::canonical(&self.rational * &factor, coeffs)
    }

    /// Order in R/Z: infinite iff an irrational coefficient survives.
    pub fn element_order(&self) -> Order {
        if !self.coeffs.is_empty() {
            return Order::Infinite;
        }
        let den = self.rational.denom();
        Order::Finite(den.to_u64().expect("denominator fits in u64"))
    }

    /// Exact value mod 1 with the basis approximations substituted in.
    pub fn value(&self, basis: &IrrationalBasis) -> Result<BigRational, CircleError> {
        let mut total = self.rational.clone();
        for (name, c) in &self.coeffs {
            total += c * basis.value_of(name)?;
        }
        Ok(frac_mod_one(&total))
    }

    /// Rounds to binary floating point; the single rounding step at the
    /// numeric boundary.
    pub fn value_f64(&self, basis: &IrrationalBasis) -> Result<f64, CircleError> {
        let v = self.value(basis)?;
        Ok(v.to_f64().expect("rational in [0,1) converts to f64"))
    }
}

impl std::ops::Add for &RotationNumber {
    type Output = RotationNumber;
    fn add(self, rhs: &RotationNumber) -> RotationNumber {
        RotationNumber::add(self, rhs)
    }
}

impl std::ops::Neg for &RotationNumber {
    type Output = RotationNumber;
    fn neg(self) -> RotationNumber {
        self.negate()
    }
}

/// Density of the generated subgroup of the circle: dense iff infinite,
/// and the subgroup is infinite iff some generator carries an irrational
/// coefficient (purely rational generators span a finite cyclic group).
pub fn subgroup_is_dense(gens: &[RotationNumber]) -> bool {
    gens.iter().any(|g| !g.coeffs.is_empty())
}

/// Realizes a group with dense circle embeddings as explicit rotations:
/// a fresh basis irrational per free generator and 1/d for the single
/// cyclic torsion generator of order d.
pub fn realize_embedding(
    h: &FgAbelianGroup,
    basis: &IrrationalBasis,
) -> Result<Vec<RotationNumber>, CircleError> {
    if !crate::abelian::embeds_densely_in_circle(h) {
        return Err(CircleError::NotEmbeddable(format!(
            "free rank {} with torsion {:?}",
            h.free_rank(),
            h.invariant_factors()
        )));
    }
    if h.free_rank() > basis.len() {
        return Err(CircleError::BasisExhausted { have: basis.len(), need: h.free_rank() });
    }
    let mut out = Vec::with_capacity(h.generator_count());
    for i in 0..h.free_rank() {
        out.push(RotationNumber::basis_generator(basis.name(i)));
    }
    for &d in h.invariant_factors() {
        out.push(RotationNumber::from_ratio(1, d as i64));
    }
    Ok(out)
}
