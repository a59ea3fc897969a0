//! Independent oracles for the branching multiplicities: Sundaram's
//! symplectic Littlewood–Richardson tableaux, the injection from
//! recording tableaux into them, and character arithmetic (Schur and
//! symplectic Schur polynomials with the `res^𝔨` restriction).
//!
//! The same numbers `m_{λ,ν}` are computed three ways — by counting
//! recording tableaux, by counting symplectic LR tableaux, and by
//! decomposing the restricted Schur polynomial in the symplectic Schur
//! basis — so a bug in any one pipeline shows up as a disagreement.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::branching::enumerate_recording;
use crate::error::Error;
use crate::partitions::{enumerate_partitions, Partition, SkewShape};
use crate::tableaux::{enumerate_skew_sst, enumerate_spt, enumerate_sst, Tableau};

/// A Laurent polynomial in a fixed number of variables, stored as a map
/// from exponent vectors to nonzero integer coefficients.
///
/// Exponent vectors are ordered lexicographically (the natural `Vec`
/// order), so the last key is the leading term used by the character
/// decomposition. All coefficient arithmetic is overflow-checked and
/// panics rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero(vars: usize) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], 1)
    }

    /// A single term `coeff · y^exp`.
    pub fn monomial(exp: Vec<i64>, coeff: i64) -> Self {
        let vars = exp.len();
        let mut poly = Self::zero(vars);
        poly.add_term(exp, coeff);
        poly
    }

    pub fn num_vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients, i.e. the evaluation at `y_i = 1`
    /// (the dimension, for a character).
    pub fn sum_of_coefficients(&self) -> i64 {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .expect("coefficient overflow in sum")
    }

    pub fn coefficient(&self, exp: &[i64]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// The lexicographically largest exponent vector and its coefficient.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, i64)> {
        self.terms.last_key_value().map(|(e, &c)| (e, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Adds `coeff · y^exp`, keeping the representation canonical.
    pub fn add_term(&mut self, exp: Vec<i64>, coeff: i64) {
        assert_eq!(exp.len(), self.vars, "exponent arity mismatch");
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(coeff)
                    .expect("coefficient overflow in add");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars, "variable arity mismatch");
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars, "variable arity mismatch");
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e.clone(), c.checked_neg().expect("coefficient overflow"));
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: i64) -> LaurentPoly {
        let mut out = Self::zero(self.vars);
        for (e, coeff) in self.iter() {
            out.add_term(
                e.clone(),
                coeff.checked_mul(c).expect("coefficient overflow in scale"),
            );
        }
        out
    }

    /// Swaps the variables `y_i` and `y_{i+1}` (1-based `i`); used to
    /// test symmetry.
    pub fn swap_variables(&self, i: usize) -> LaurentPoly {
        assert!(i >= 1 && i < self.vars, "no adjacent pair at {}", i);
        let mut out = Self::zero(self.vars);
        for (e, c) in self.iter() {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.add_term(e, c);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Display from the leading term down.
        for (exp, coeff) in self.terms.iter().rev() {
            if first {
                if coeff < &0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff < &0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.unsigned_abs();
            let pows: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("y{}", i + 1)
                    } else {
                        format!("y{}^{}", i + 1, p)
                    }
                })
                .collect();
            if pows.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if abs != 1 {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", pows.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Which pipeline produced a multiplicity table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Counts recording tableaux (the bijection of the branching
    /// algorithm).
    Bijection,
    /// Counts Sundaram's symplectic LR tableaux.
    Sundaram,
    /// Decomposes the restricted Schur polynomial in the symplectic
    /// Schur basis.
    Character,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Bijection, Backend::Sundaram, Backend::Character];
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Backend::Bijection => "bijection",
            Backend::Sundaram => "sundaram",
            Backend::Character => "character",
        };
        write!(f, "{}", name)
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "bijection" => Ok(Backend::Bijection),
            "sundaram" => Ok(Backend::Sundaram),
            "character" => Ok(Backend::Character),
            other => Err(Error::Parse(format!("unknown backend: {}", other))),
        }
    }
}

/// The multiplicities `m_{λ,ν}` of one restriction, with only nonzero
/// entries stored.
///
/// Serializes as
/// `{"lambda": […], "n": n, "backend": "…",
///   "multiplicities": [{"nu": […], "m": k}, …]}`
/// with `ν` sorted lexicographically decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub lambda: Partition,
    pub n: u32,
    pub backend: Backend,
    pub entries: BTreeMap<Partition, u64>,
}

impl MultiplicityTable {
    pub fn multiplicity(&self, nu: &Partition) -> u64 {
        self.entries.get(nu).copied().unwrap_or(0)
    }

    /// `Σ_ν m_{λ,ν} · |SpT_{2n}(ν)|`; must equal `|SST_{2n}(λ)|`.
    pub fn total_dimension(&self) -> u64 {
        self.entries
            .iter()
            .map(|(nu, &m)| m * enumerate_spt(nu, self.n).len() as u64)
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct MultiplicityEntryWire {
    nu: Partition,
    m: u64,
}

#[derive(Serialize, Deserialize)]
struct MultiplicityTableWire {
    lambda: Partition,
    n: u32,
    backend: Backend,
    multiplicities: Vec<MultiplicityEntryWire>,
}

impl Serialize for MultiplicityTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = MultiplicityTableWire {
            lambda: self.lambda.clone(),
            n: self.n,
            backend: self.backend,
            // BTreeMap iterates lex-increasing; the wire format wants
            // lex-decreasing.
            multiplicities: self
                .entries
                .iter()
                .rev()
                .map(|(nu, &m)| MultiplicityEntryWire { nu: nu.clone(), m })
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiplicityTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = MultiplicityTableWire::deserialize(deserializer)?;
        let mut entries = BTreeMap::new();
        for e in wire.multiplicities {
            if e.m == 0 {
                return Err(D::Error::custom("zero multiplicity entry"));
            }
            if entries.insert(e.nu, e.m).is_some() {
                return Err(D::Error::custom("duplicate partition in table"));
            }
        }
        Ok(MultiplicityTable {
            lambda: wire.lambda,
            n: wire.n,
            backend: wire.backend,
            entries,
        })
    }
}

/// Checks whether a skew tableau is a symplectic Littlewood–Richardson
/// tableau for `Sp(2n)`:
///
/// 1. it is semistandard with entries in `[1, 2n]`;
/// 2. the *reversed* column word is a lattice permutation;
/// 3. its weight is a partition with even columns;
/// 4. every odd entry `2k + 1` sits in a row `i ≤ n + k`.
pub fn is_symplectic_lr(t: &Tableau, n: u32) -> bool {
    let m = 2 * n;
    if !t.is_semistandard(m) {
        return false;
    }
    // Condition 2: stream the reversed column word, maintaining counts.
    let mut counts = vec![0usize; m as usize + 1];
    for &w in t.column_word().iter().rev() {
        let w = w as usize;
        counts[w] += 1;
        if w > 1 && counts[w] > counts[w - 1] {
            return false;
        }
    }
    // Condition 3: the weight must be a weakly decreasing sequence whose
    // conjugate has even parts.
    let weight = t.weight(m).expect("entries checked semistandard");
    match Partition::new(weight) {
        Ok(wt) => {
            if !wt.has_even_columns() {
                return false;
            }
        }
        Err(_) => return false,
    }
    // Condition 4.
    for (cell, v) in t.cells() {
        if v % 2 == 1 {
            let k = (v - 1) / 2;
            if cell.row > (n + k) as usize {
                return false;
            }
        }
    }
    true
}

/// Enumerates `LR^Sp_{2n}(λ/ν)`: all semistandard fillings of `λ/ν` with
/// entries `≤ 2n` passing [`is_symplectic_lr`], in the order produced by
/// [`enumerate_skew_sst`].
pub fn enumerate_lrsp(lambda: &Partition, nu: &Partition, n: u32) -> Result<Vec<Tableau>, Error> {
    let shape = SkewShape::new(lambda.clone(), nu.clone())?;
    Ok(enumerate_skew_sst(&shape, 2 * n)
        .into_iter()
        .filter(|t| is_symplectic_lr(t, n))
        .collect())
}

/// The counting map from recording tableaux to symplectic LR tableaux:
/// the entry at `(i, j)` becomes the number of occurrences of the value
/// `R(i, j)` in rows `1..=i` of `R`.
///
/// On fillings satisfying (R1)–(R5) this is injective and lands in
/// `LR^Sp`; it is defined (but unconstrained) on arbitrary fillings.
pub fn rec_to_lrsp(r: &Tableau) -> Result<Tableau, Error> {
    let shape = r.shape().clone();
    let cells = r.cells();
    let rows: Vec<Vec<u32>> = (1..=shape.outer().len())
        .map(|i| {
            shape
                .row_cols(i)
                .map(|j| {
                    let v = r.get(i, j).expect("cell in domain");
                    cells
                        .iter()
                        .filter(|(c, w)| c.row <= i && *w == v)
                        .count() as u32
                })
                .collect()
        })
        .collect();
    Tableau::new(shape, rows)
}

/// The Schur polynomial `s_λ(x_1, …, x_m) = Σ_{T ∈ SST_m(λ)} x^{wt(T)}`.
///
/// Zero when `ℓ(λ) > m` (there are no tableaux).
pub fn schur(lambda: &Partition, m: u32) -> LaurentPoly {
    let mut poly = LaurentPoly::zero(m as usize);
    for t in enumerate_sst(lambda, m) {
        let exp: Vec<i64> = t
            .weight(m)
            .expect("enumerated tableaux are in range")
            .into_iter()
            .map(|c| c as i64)
            .collect();
        poly.add_term(exp, 1);
    }
    poly
}

/// The symplectic Schur polynomial
/// `s^Sp_ν(y_1, …, y_n) = Σ_{T ∈ SpT_{2n}(ν)} y^{wt^Sp(T)}`.
///
/// Zero when `ℓ(ν) > n` (the King condition empties the set).
pub fn sp_schur(nu: &Partition, n: u32) -> LaurentPoly {
    let mut poly = LaurentPoly::zero(n as usize);
    for t in enumerate_spt(nu, n) {
        let exp = t.sp_weight(n).expect("enumerated tableaux are in range");
        poly.add_term(exp, 1);
    }
    poly
}

/// The restriction homomorphism `res^𝔨` from `2n` variables to `n`:
/// `x_{2i−1} ↦ y_i^{(−1)^{i−1}}`, `x_{2i} ↦ y_i^{(−1)^i}`, i.e. a
/// monomial with exponent `w` maps to the exponent
/// `z_i = (−1)^{i−1}(w_{2i−1} − w_{2i})`.
pub fn restrict_character(p: &LaurentPoly, n: u32) -> Result<LaurentPoly, Error> {
    if p.num_vars() != 2 * n as usize {
        return Err(Error::ShapeMismatch(format!(
            "restriction expects {} variables, got {}",
            2 * n,
            p.num_vars()
        )));
    }
    let mut out = LaurentPoly::zero(n as usize);
    for (w, c) in p.iter() {
        let z: Vec<i64> = (0..n as usize)
            .map(|i| {
                let diff = w[2 * i] - w[2 * i + 1];
                if i % 2 == 0 {
                    diff
                } else {
                    -diff
                }
            })
            .collect();
        out.add_term(z, c);
    }
    Ok(out)
}

/// Writes `poly` as `Σ_ν c_ν s^Sp_ν` by repeatedly eliminating the
/// lexicographically leading term, whose exponent must be a partition
/// appearing with positive coefficient (the leading monomial of `s^Sp_ν`
/// is `y^ν`).
pub fn decompose_in_sp_basis(
    poly: &LaurentPoly,
    n: u32,
) -> Result<BTreeMap<Partition, u64>, Error> {
    let mut rem = poly.clone();
    let mut out = BTreeMap::new();
    while let Some((exp, coeff)) = rem.leading_term() {
        if coeff < 0 {
            return Err(Error::NonDecomposable(format!(
                "leading coefficient {} of y^{:?} is negative",
                coeff, exp
            )));
        }
        if exp.iter().any(|&e| e < 0) || exp.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonDecomposable(format!(
                "leading exponent {:?} is not a partition",
                exp
            )));
        }
        let exp = exp.clone();
        let nu = Partition::new(exp.iter().map(|&e| e as usize).collect::<Vec<_>>())
            .expect("checked weakly decreasing");
        let basis = sp_schur(&nu, n);
        debug_assert_eq!(
            basis.leading_term(),
            Some((&exp, 1)),
            "s^Sp_{} must lead with y^ν",
            nu
        );
        rem = rem.sub(&basis.scale(coeff));
        if out.insert(nu, coeff as u64).is_some() {
            return Err(Error::Internal(
                "elimination revisited a leading partition".into(),
            ));
        }
    }
    Ok(out)
}

/// Computes the multiplicity table `{ν ↦ m_{λ,ν}}` with the chosen
/// backend. All backends agree; disagreement indicates a bug in one of
/// the pipelines.
pub fn branching_multiplicities(
    lambda: &Partition,
    n: u32,
    backend: Backend,
) -> Result<MultiplicityTable, Error> {
    if lambda.len() > 2 * n as usize {
        return Err(Error::InvalidShape(format!(
            "λ = {} has more than 2n = {} rows",
            lambda,
            2 * n
        )));
    }
    let mut entries = BTreeMap::new();
    match backend {
        Backend::Bijection => {
            for nu in enumerate_partitions(n as usize, lambda) {
                let m = enumerate_recording(lambda, &nu, n)?.len() as u64;
                if m > 0 {
                    entries.insert(nu, m);
                }
            }
        }
        Backend::Sundaram => {
            for nu in enumerate_partitions(n as usize, lambda) {
                let m = enumerate_lrsp(lambda, &nu, n)?.len() as u64;
                if m > 0 {
                    entries.insert(nu, m);
                }
            }
        }
        Backend::Character => {
            let restricted = restrict_character(&schur(lambda, 2 * n), n)?;
            entries = decompose_in_sp_basis(&restricted, n)?;
        }
    }
    Ok(MultiplicityTable {
        lambda: lambda.clone(),
        n,
        backend,
        entries,
    })
}
