//! Exact integer linear algebra for the symplectic representation.
//!
//! Basis convention: `x1, y1, x2, y2, ..., xg, yg` ("xy-interleaved-v1"),
//! with the intersection form pairing `Ω(x_i, y_i) = +1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

pub type Int = BigInt;

pub const BASIS_ID: &str = "xy-interleaved-v1";

/// Integer vector of length 2g: the homology class of a curve.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HomologyVector {
    entries: Vec<Int>,
}

impl HomologyVector {
    pub fn zero(genus: usize) -> Self {
        HomologyVector {
            entries: vec![Int::zero(); 2 * genus],
        }
    }

    pub fn from_entries(entries: Vec<Int>) -> Result<Self, Error> {
        if entries.is_empty() || entries.len() % 2 != 0 {
            return Err(Error::Dimension(format!(
                "homology vector length {} is not 2g",
                entries.len()
            )));
        }
        Ok(HomologyVector { entries })
    }

    /// Basis vector x_i (1-indexed handle).
    pub fn basis_x(genus: usize, i: usize) -> Self {
        let mut v = Self::zero(genus);
        v.entries[2 * (i - 1)] = Int::one();
        v
    }

    /// Basis vector y_i (1-indexed handle).
    pub fn basis_y(genus: usize, i: usize) -> Self {
        let mut v = Self::zero(genus);
        v.entries[2 * (i - 1) + 1] = Int::one();
        v
    }

    pub fn genus(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn entry(&self, idx: usize) -> &Int {
        &self.entries[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// gcd of the entries is 1 (and the vector is nonzero).
    pub fn is_primitive(&self) -> bool {
        let mut g = Int::zero();
        for e in &self.entries {
            g = num_integer::gcd(g, e.clone());
        }
        g.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        HomologyVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        HomologyVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        HomologyVector {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        HomologyVector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    /// Signed linear combination `sum_i coeff_i * v_i`.
    pub fn combination(terms: &[(i64, &HomologyVector)]) -> Self {
        assert!(!terms.is_empty());
        let mut out = Self::zero(terms[0].1.genus());
        for (c, v) in terms {
            out = out.add(&v.scale(&Int::from(*c)));
        }
        out
    }
}

/// The intersection pairing `uᵀΩv` in the interleaved basis.
///
/// Block-diagonal with g blocks [[0,1],[-1,0]], so
/// `Ω(u,v) = Σ_i (u_{x_i} v_{y_i} - u_{y_i} v_{x_i})`.
pub fn pairing(u: &HomologyVector, v: &HomologyVector) -> Result<Int, Error> {
    if u.dim() != v.dim() {
        return Err(Error::Dimension(format!(
            "pairing of vectors with lengths {} and {}",
            u.dim(),
            v.dim()
        )));
    }
    let mut acc = Int::zero();
    for i in 0..u.genus() {
        let (xi, yi) = (2 * i, 2 * i + 1);
        acc += &u.entries[xi] * &v.entries[yi] - &u.entries[yi] * &v.entries[xi];
    }
    Ok(acc)
}

/// The matrix of Ω itself (mostly useful for tests and reports).
pub fn intersection_form(genus: usize) -> SympMatrix {
    let n = 2 * genus;
    let mut m = vec![Int::zero(); n * n];
    for i in 0..genus {
        m[(2 * i) * n + 2 * i + 1] = Int::one();
        m[(2 * i + 1) * n + 2 * i] = -Int::one();
    }
    SympMatrix { n, entries: m }
}

/// A 2g×2g integer matrix preserving the intersection form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SympMatrix {
    n: usize,
    /// Row-major entries.
    entries: Vec<Int>,
}

impl SympMatrix {
    pub fn identity(genus: usize) -> Self {
        let n = 2 * genus;
        let mut entries = vec![Int::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Int::one();
        }
        SympMatrix { n, entries }
    }

    /// Construct from row-major entries, checking the symplectic condition.
    pub fn new(genus: usize, entries: Vec<Int>) -> Result<Self, Error> {
        let n = 2 * genus;
        if entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "matrix has {} entries, expected {}",
                entries.len(),
                n * n
            )));
        }
        let m = SympMatrix { n, entries };
        if !m.is_symplectic_raw() {
            return Err(Error::NotSymplectic);
        }
        Ok(m)
    }

    /// Construct without the symplectic check. For internal use where the
    /// invariant is guaranteed by construction (and asserted in debug builds).
    pub(crate) fn new_unchecked(genus: usize, entries: Vec<Int>) -> Self {
        let n = 2 * genus;
        debug_assert_eq!(entries.len(), n * n);
        let m = SympMatrix { n, entries };
        debug_assert!(m.is_symplectic_raw());
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.n / 2
    }

    pub fn entry(&self, row: usize, col: usize) -> &Int {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn row_major(&self) -> Vec<Vec<Int>> {
        (0..self.n)
            .map(|r| self.entries[r * self.n..(r + 1) * self.n].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &SympMatrix) -> SympMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![Int::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        SympMatrix {
            n,
            entries: out,
        }
    }

    pub fn apply(&self, v: &HomologyVector) -> HomologyVector {
        assert_eq!(self.n, v.dim());
        let n = self.n;
        let mut out = vec![Int::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let a = &self.entries[i * n + j];
                if !a.is_zero() {
                    out[i] += a * v.entry(j);
                }
            }
        }
        HomologyVector { entries: out }
    }

    pub fn transpose(&self) -> SympMatrix {
        let n = self.n;
        let mut out = vec![Int::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        SympMatrix { n, entries: out }
    }

    /// Exact inverse. For a symplectic M the inverse is `Ω⁻¹ Mᵀ Ω` — no
    /// elimination needed, and it stays integral.
    pub fn inverse(&self) -> SympMatrix {
        let g = self.genus();
        let omega = intersection_form(g);
        // Ω⁻¹ = -Ω = Ωᵀ for this block form.
        let omega_inv = omega.transpose();
        omega_inv.mul(&self.transpose()).mul(&omega)
    }

    pub fn pow(&self, e: i64) -> SympMatrix {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = SympMatrix::identity(self.genus());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.entries.iter().enumerate().all(|(idx, e)| {
            if idx / n == idx % n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    fn is_symplectic_raw(&self) -> bool {
        // MᵀΩM = Ω checked columnwise via the pairing to avoid building Ω.
        let n = self.n;
        let col = |j: usize| HomologyVector {
            entries: (0..n).map(|i| self.entries[i * n + j].clone()).collect(),
        };
        for i in 0..self.genus() {
            let cx = col(2 * i);
            let cy = col(2 * i + 1);
            if pairing(&cx, &cy).unwrap() != Int::one() {
                return false;
            }
            for j in (i + 1)..self.genus() {
                let dx = col(2 * j);
                let dy = col(2 * j + 1);
                if !pairing(&cx, &dx).unwrap().is_zero()
                    || !pairing(&cx, &dy).unwrap().is_zero()
                    || !pairing(&cy, &dx).unwrap().is_zero()
                    || !pairing(&cy, &dy).unwrap().is_zero()
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs_entry(&self) -> Int {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }
}

/// The homology action of the Dehn twist along `c`: `u ↦ u + Ω(u,c)·c`.
///
/// Invariant under `c ↦ -c`, so curve orientation never matters.
pub fn transvection(c: &HomologyVector) -> Result<SympMatrix, Error> {
    if c.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let n = c.dim();
    let g = c.genus();
    let mut entries = vec![Int::zero(); n * n];
    for j in 0..n {
        let mut e = HomologyVector::zero(g);
        e.entries[j] = Int::one();
        let coeff = pairing(&e, c)?;
        for i in 0..n {
            let mut val = if i == j { Int::one() } else { Int::zero() };
            val += &coeff * c.entry(i);
            entries[i * n + j] = val;
        }
    }
    Ok(SympMatrix::new_unchecked(g, entries))
}

/// Order-2 test: M² = Id.
pub fn is_involution(m: &SympMatrix) -> bool {
    m.mul(m).is_identity()
}

pub fn is_symplectic(m: &SympMatrix) -> bool {
    m.is_symplectic_raw()
}

/// A matrix over the p-element field, entries in `0..p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMatrix {
    pub p: u64,
    pub n: usize,
    /// Row-major entries, reduced.
    pub entries: Vec<u64>,
}

impl ModMatrix {
    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.n, other.n);
        assert_eq!(self.p, other.p);
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b != 0 {
                        out[i * n + j] = (out[i * n + j] + a * b) % self.p;
                    }
                }
            }
        }
        ModMatrix {
            p: self.p,
            n,
            entries: out,
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Entrywise reduction mod a prime p.
pub fn reduce_mod(m: &SympMatrix, p: u64) -> Result<ModMatrix, Error> {
    if !is_prime(p) {
        return Err(Error::Config(format!("{p} is not prime")));
    }
    let pi = Int::from(p);
    let entries = m
        .entries
        .iter()
        .map(|e| {
            let mut r = e % &pi;
            if r.is_negative() {
                r += &pi;
            }
            // entries are < p, always fits
            u64::try_from(r).unwrap()
        })
        .collect();
    Ok(ModMatrix {
        p,
        n: m.n,
        entries,
    })
}
