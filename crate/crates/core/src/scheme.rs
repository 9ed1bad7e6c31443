//! PIR parameters of a (storage, retrieval) pair of cyclic codes.
//!
//! Privacy is t = d(D^perp) - 1 and the rate is dim((C*D)^perp) / n. Both C
//! and C*D are cyclic, so their automorphism groups are transitive.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclic::CyclicCodeSpec;
use crate::distance::{Bound, DistanceEngine, DistanceReport};
use crate::error::{Error, Result};

/// Collusion tolerance; an interval when d(D^perp) is only bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Privacy {
    pub lo: usize,
    pub hi: usize,
    pub exact: bool,
}

impl Privacy {
    /// t = d - 1, with the zero code's infinite distance read as n + 1.
    pub fn from_report(r: &DistanceReport, n: usize) -> Self {
        let t = |b: Bound| b.finite().map_or(n, |d| d - 1);
        Self { lo: t(r.lower), hi: t(r.upper), exact: r.exact }
    }

    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lo)
    }
}

impl fmt::Display for Privacy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lo)
        } else {
            write!(f, ">={} (<={})", self.lo, self.hi)
        }
    }
}

/// u/n kept unreduced for display; compare through [`Rate::ratio`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rate {
    pub num: u64,
    pub den: u64,
}

impl Rate {
    pub fn new(num: u64, den: u64) -> Self {
        Self { num, den }
    }

    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.num, self.den)
    }
}

impl PartialOrd for Rate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.ratio().cmp(&other.ratio()))
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse { position: 0, message: format!("rate '{s}': {message}") };
        let (a, b) = s.split_once('/').ok_or_else(|| bad("expected 'num/den'"))?;
        let num = a.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: u64 = b.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den == 0 {
            return Err(bad("zero denominator"));
        }
        Ok(Self { num, den })
    }
}

impl Serialize for Rate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PirParameters {
    pub n: usize,
    pub q: u32,
    pub privacy: Privacy,
    pub retrieved_per_round: usize,
    pub rate: Rate,
    pub ddual: DistanceReport,
    pub star_dim: usize,
}

fn check_pair(c: &CyclicCodeSpec, d: &CyclicCodeSpec) -> Result<CyclicCodeSpec> {
    let star = c.star(d)?;
    if star.dim() == star.n() as usize {
        return Err(Error::StarFillsSpace);
    }
    Ok(star)
}

/// Privacy and rate of the scheme with storage code `c` and retrieval code `d`.
pub fn evaluate_scheme(c: &CyclicCodeSpec, d: &CyclicCodeSpec, engine: &DistanceEngine) -> Result<PirParameters> {
    let star = check_pair(c, d)?;
    let n = c.n() as usize;
    let u = n - star.dim();
    let ddual = engine.report(&d.dual())?;
    Ok(PirParameters {
        n,
        q: c.q(),
        privacy: Privacy::from_report(&ddual, n),
        retrieved_per_round: u,
        rate: Rate::new(u as u64, n as u64),
        ddual,
        star_dim: star.dim(),
    })
}

/// [n, k, d] of one code column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeColumn(pub usize, pub usize, pub DistanceReport);

impl CodeColumn {
    fn of(c: &CyclicCodeSpec, engine: &DistanceEngine) -> Result<Self> {
        Ok(Self(c.n() as usize, c.dim(), engine.report(c)?))
    }

    pub fn n(&self) -> usize {
        self.0
    }

    pub fn k(&self) -> usize {
        self.1
    }

    pub fn distance(&self) -> &DistanceReport {
        &self.2
    }
}

impl fmt::Display for CodeColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0, self.1, self.2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeCodes {
    #[serde(rename = "C")]
    pub c: CyclicCodeSpec,
    #[serde(rename = "D")]
    pub d: CyclicCodeSpec,
}

/// The five code columns plus privacy and rate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeRow {
    #[serde(rename = "C")]
    pub c: CodeColumn,
    #[serde(rename = "D")]
    pub d: CodeColumn,
    #[serde(rename = "Ddual")]
    pub ddual: CodeColumn,
    pub star: CodeColumn,
    pub stardual: CodeColumn,
    pub privacy: Privacy,
    pub rate: Rate,
    pub codes: SchemeCodes,
}

pub fn scheme_row(c: &CyclicCodeSpec, d: &CyclicCodeSpec, engine: &DistanceEngine) -> Result<SchemeRow> {
    let star = check_pair(c, d)?;
    let params = evaluate_scheme(c, d, engine)?;
    Ok(SchemeRow {
        c: CodeColumn::of(c, engine)?,
        d: CodeColumn::of(d, engine)?,
        ddual: CodeColumn::of(&d.dual(), engine)?,
        star: CodeColumn::of(&star, engine)?,
        stardual: CodeColumn::of(&star.dual(), engine)?,
        privacy: params.privacy,
        rate: params.rate,
        codes: SchemeCodes { c: c.clone(), d: d.clone() },
    })
}

impl SchemeRow {
    /// Privacy and rate recomputed from the code columns.
    pub fn is_self_consistent(&self) -> bool {
        let n = self.c.n();
        Privacy::from_report(self.ddual.distance(), n) == self.privacy
            && self.rate == Rate::new(self.stardual.k() as u64, n as u64)
            && self.star.k() + self.stardual.k() == n
            && self.d.k() + self.ddual.k() == n
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankedScheme {
    /// Position in the input list.
    pub index: usize,
    pub params: PirParameters,
    pub pareto: bool,
    pub bound_only: bool,
}

/// `a` is at least as good as `b` on both axes and strictly better on one,
/// judged only on what the bounds guarantee.
fn dominates(a: &PirParameters, b: &PirParameters) -> bool {
    let (ra, rb) = (a.rate.ratio(), b.rate.ratio());
    a.privacy.lo >= b.privacy.hi && ra >= rb && (a.privacy.lo > b.privacy.hi || ra > rb)
}

/// Sorts by privacy (lower bound) then rate, both descending; ties keep input order.
pub fn compare_schemes(schemes: &[PirParameters]) -> Result<Vec<RankedScheme>> {
    if let Some(first) = schemes.first() {
        if let Some(other) = schemes.iter().find(|s| s.n != first.n || s.q != first.q) {
            return Err(Error::Mismatch { q1: first.q, n1: first.n as u32, q2: other.q, n2: other.n as u32 });
        }
    }
    let mut ranked: Vec<RankedScheme> = schemes
        .iter()
        .enumerate()
        .map(|(index, p)| RankedScheme {
            index,
            params: p.clone(),
            pareto: !schemes.iter().any(|o| dominates(o, p)),
            bound_only: !p.privacy.exact,
        })
        .collect();
    ranked.sort_by(|a, b| {
        b.params
            .privacy
            .lo
            .cmp(&a.params.privacy.lo)
            .then_with(|| b.params.rate.ratio().cmp(&a.params.rate.ratio()))
    });
    Ok(ranked)
}
