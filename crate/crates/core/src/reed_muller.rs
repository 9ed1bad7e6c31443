//! Binary Reed-Muller codes and their punctured / shortened versions at the
//! point 0.
//!
//! Evaluation points are the integers 0..2^m-1 read as bit vectors (bit i is
//! the value of x_i), so point 0 is coordinate 0.

use crate::code::LinearCode;
use crate::cyclic::{CyclicCodeSpec, ResidueSet};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Matrix;

pub const MAX_RM_VARIABLES: u32 = 12;
const MAX_CYCLIC_VARIABLES: u32 = 20;
const MAX_STAR_CHECK_VARIABLES: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RMSpec {
    r: u32,
    m: u32,
}

impl RMSpec {
    pub fn new(r: u32, m: u32) -> Result<Self> {
        if m == 0 || r > m {
            return Err(Error::ReedMuller(format!("need 0 <= r <= m and m >= 1, got r={r} m={m}")));
        }
        if m > MAX_RM_VARIABLES {
            return Err(Error::Budget { what: "Reed-Muller length", detail: format!("m={m} > {MAX_RM_VARIABLES}") });
        }
        Ok(Self { r, m })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        1 << self.m
    }

    pub fn k(&self) -> usize {
        (0..=self.r).map(|i| binomial(self.m, i)).sum()
    }

    pub fn d(&self) -> usize {
        1 << (self.m - self.r)
    }

    /// Monomials of degree <= r as variable bitmasks, by degree then value.
    fn monomials(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (0u32..1 << self.m).filter(|s| s.count_ones() <= self.r).collect();
        out.sort_by_key(|s| (s.count_ones(), *s));
        out
    }
}

fn binomial(n: u32, k: u32) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

/// Rows are the evaluations of the multilinear monomials of degree <= r.
pub fn rm_generator_matrix(spec: &RMSpec) -> Result<LinearCode> {
    let n = spec.n();
    let monomials = spec.monomials();
    let mut g = Matrix::zeros(2, monomials.len(), n);
    for (row, &mono) in monomials.iter().enumerate() {
        for x in 0..n as u32 {
            if x & mono == mono {
                g.set(row, x as usize, 1);
            }
        }
    }
    LinearCode::new(g)
}

/// Drops the coordinate of point 0: [2^m - 1, k, 2^(m-r) - 1].
pub fn puncture_at_zero(spec: &RMSpec) -> Result<LinearCode> {
    if spec.r == 0 {
        return Err(Error::ReedMuller("puncturing needs r >= 1".into()));
    }
    if spec.r == spec.m {
        return Err(Error::ReedMuller(format!("RM({0},{0}) is the whole space; puncturing drops the dimension", spec.m)));
    }
    let g = rm_generator_matrix(spec)?;
    let keep: Vec<usize> = (1..spec.n()).collect();
    LinearCode::new(g.generator().select_columns(&keep))
}

/// Codewords vanishing at point 0 with that coordinate removed: [2^m - 1, k - 1, 2^(m-r)].
pub fn shorten_at_zero(spec: &RMSpec) -> Result<LinearCode> {
    if spec.k() < 2 {
        return Err(Error::ReedMuller(format!("shortening needs k >= 2, RM({},{}) has k = {}", spec.r, spec.m, spec.k())));
    }
    rm_generator_matrix(spec)?.shorten(0)
}

/// Whether coset {0} joins the weight-bounded exponent set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZeroCoset {
    /// Punctured RM(c, m).
    #[default]
    Include,
    /// Shortened RM(c, m), the subcode vanishing at the removed point.
    Exclude,
}

/// Cyclic code of length 2^m - 1 with generating set {i : w_2(i) <= c}.
pub fn punctured_rm_as_cyclic(c: u32, m: u32) -> Result<CyclicCodeSpec> {
    rm_as_cyclic(c, m, ZeroCoset::Include)
}

pub fn rm_as_cyclic(c: u32, m: u32, zero: ZeroCoset) -> Result<CyclicCodeSpec> {
    if c == 0 || c > m || m < 2 {
        return Err(Error::ReedMuller(format!("need 1 <= c <= m and m >= 2, got c={c} m={m}")));
    }
    if m > MAX_CYCLIC_VARIABLES {
        return Err(Error::Budget { what: "cyclic RM length", detail: format!("m={m} > {MAX_CYCLIC_VARIABLES}") });
    }
    let n = (1u32 << m) - 1;
    let set = ResidueSet::from_residues(
        n,
        (0..n).filter(|&i| i.count_ones() <= c && !(i == 0 && zero == ZeroCoset::Exclude)),
    );
    CyclicCodeSpec::from_generating_set(2, set)
}

/// Nonzero points in cyclic order: entry i is alpha^(-i) as a bit vector in
/// the polynomial basis of GF(2^m).
pub fn cyclic_point_order(m: u32) -> Result<Vec<u32>> {
    if m < 2 || m > MAX_RM_VARIABLES {
        return Err(Error::ReedMuller(format!("cyclic point order needs 2 <= m <= {MAX_RM_VARIABLES}, got {m}")));
    }
    let n = (1u32 << m) - 1;
    let field = FieldSpec::for_length(2, n)?;
    Ok((0..n as i64).map(|i| field.alpha_pow(-i).to_vector()).collect())
}

/// Punctured (or shortened) RM(r, m) with coordinates reordered by
/// [`cyclic_point_order`]; equal as a code to [`rm_as_cyclic`].
pub fn rm_in_cyclic_order(spec: &RMSpec, zero: ZeroCoset) -> Result<LinearCode> {
    let code = match zero {
        ZeroCoset::Include => puncture_at_zero(spec)?,
        ZeroCoset::Exclude => shorten_at_zero(spec)?,
    };
    let order: Vec<usize> = cyclic_point_order(spec.m)?.into_iter().map(|p| p as usize - 1).collect();
    LinearCode::new(code.generator().select_columns(&order))
}

/// Span of products RM(r1,m) * RM(r2,m) against RM(r1+r2, m).
pub fn rm_star_identity_check(r1: u32, r2: u32, m: u32) -> Result<bool> {
    if r1 + r2 > m {
        return Err(Error::ReedMuller(format!("r1 + r2 = {} exceeds m = {m}", r1 + r2)));
    }
    if m > MAX_STAR_CHECK_VARIABLES {
        return Err(Error::Budget { what: "star identity check", detail: format!("m={m} > {MAX_STAR_CHECK_VARIABLES}") });
    }
    let a = rm_generator_matrix(&RMSpec::new(r1, m)?)?;
    let b = rm_generator_matrix(&RMSpec::new(r2, m)?)?;
    let c = rm_generator_matrix(&RMSpec::new(r1 + r2, m)?)?;
    Ok(a.star(&b)?.same_code(&c))
}
