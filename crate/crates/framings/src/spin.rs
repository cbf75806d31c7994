//! Spin structures as quadratic forms on mod-2 homology.
//!
//! A quadratic form `w` satisfies `w(a+b) = w(a) + w(b) + a.b` and is stored
//! by its values on the basis; evaluation expands through the polarization.
//! Dehn twists act through transvections `x -> x + (x.a) a`, which shift the
//! form by the coboundary `(w(a)+1) (. a)`. Orbit membership and orbit counts
//! are decided by closed-form criteria over the boundary restriction and the
//! Arf invariant.

use crate::surface::{intersection_mod2, F2Class, SurfaceSig};
use crate::Error;

/// A spin structure, encoded by the base values of its quadratic form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    sig: SurfaceSig,
    base: Vec<u8>,
}

/// An element of first cohomology mod 2, by its values on the basis.
/// Differences of quadratic forms and the functionals `x .` live here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinFunctional {
    pub sig: SurfaceSig,
    pub values: Vec<u8>,
}

/// A cohomology class of the boundary: one bit per boundary component,
/// indexed `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryFunctional {
    pub values: Vec<u8>,
}

impl BoundaryFunctional {
    pub fn new(sig: &SurfaceSig, values: Vec<u8>) -> Result<Self, Error> {
        if values.len() != sig.boundary_count() {
            return Err(Error::LengthMismatch {
                what: "boundary functional",
                expected: sig.boundary_count(),
                got: values.len(),
            });
        }
        if values.iter().any(|&v| v > 1) {
            return Err(Error::NotABit);
        }
        Ok(BoundaryFunctional { values })
    }

    pub fn parity(&self) -> u8 {
        self.values.iter().fold(0, |acc, v| acc ^ v)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

impl QuadForm {
    pub fn new(sig: SurfaceSig, base: Vec<u8>) -> Result<Self, Error> {
        if base.len() != sig.b1() {
            return Err(Error::LengthMismatch {
                what: "quadratic form base values",
                expected: sig.b1(),
                got: base.len(),
            });
        }
        if base.iter().any(|&b| b > 1) {
            return Err(Error::NotABit);
        }
        Ok(QuadForm { sig, base })
    }

    pub fn sig(&self) -> &SurfaceSig {
        &self.sig
    }

    pub fn base(&self) -> &[u8] {
        &self.base
    }

    /// Evaluate the form: the unique quadratic extension of the base values
    /// whose polarization is the mod-2 intersection pairing. Cross terms
    /// appear only for the handle pairs `(A(i), B(i))`.
    pub fn eval(&self, x: &F2Class) -> Result<u8, Error> {
        if x.bits.len() != self.sig.b1() {
            return Err(Error::LengthMismatch {
                what: "class coordinates",
                expected: self.sig.b1(),
                got: x.bits.len(),
            });
        }
        let mut acc = 0u8;
        for (xi, bi) in x.bits.iter().zip(&self.base) {
            acc ^= xi & bi;
        }
        for i in 0..self.sig.genus() {
            acc ^= x.bits[2 * i] & x.bits[2 * i + 1];
        }
        Ok(acc)
    }

    /// The 1-cocycle value of the twist along `a`: the functional
    /// `x -> (w(a)+1)(x . a)`.
    pub fn coboundary(&self, a: &F2Class) -> Result<LinFunctional, Error> {
        let coeff = self.eval(a)? ^ 1;
        let mut values = vec![0u8; self.sig.b1()];
        if coeff == 1 {
            for (k, v) in values.iter_mut().enumerate() {
                let mut e = F2Class::zero(&self.sig);
                e.bits[k] = 1;
                *v = intersection_mod2(&self.sig, &e, a)?;
            }
        }
        Ok(LinFunctional {
            sig: self.sig,
            values,
        })
    }

    /// The form pulled back along the transvection in direction `a`.
    pub fn transvect(&self, a: &F2Class) -> Result<QuadForm, Error> {
        let shift = self.coboundary(a)?;
        let base = self
            .base
            .iter()
            .zip(&shift.values)
            .map(|(b, s)| b ^ s)
            .collect();
        Ok(QuadForm {
            sig: self.sig,
            base,
        })
    }

    /// Values on the boundary components, length `n+1`. Entry `j >= 1` is the
    /// base value on `D(j)`; entry 0 evaluates the dependent class, which
    /// makes the entries always sum to zero.
    pub fn restrict_boundary(&self) -> BoundaryFunctional {
        let g = self.sig.genus();
        let mut values = Vec::with_capacity(self.sig.boundary_count());
        let h0 = self.base[2 * g..].iter().fold(0u8, |acc, b| acc ^ b);
        values.push(h0);
        values.extend_from_slice(&self.base[2 * g..]);
        BoundaryFunctional { values }
    }

    /// Arf invariant, defined only when the boundary restriction vanishes.
    pub fn arf(&self) -> Result<u8, Error> {
        if !self.restrict_boundary().is_zero() {
            return Err(Error::ArfUndefinedNonzeroRestriction);
        }
        let mut acc = 0u8;
        for i in 0..self.sig.genus() {
            acc ^= self.base[2 * i] & self.base[2 * i + 1];
        }
        Ok(acc)
    }
}

/// Transvection on classes: `x -> x + (x . a) a`.
pub fn transvect_class(sig: &SurfaceSig, a: &F2Class, x: &F2Class) -> Result<F2Class, Error> {
    let pairing = intersection_mod2(sig, x, a)?;
    if pairing == 0 {
        Ok(x.clone())
    } else {
        Ok(x.add(a))
    }
}

/// The base form for a boundary functional `h` with even component sum:
/// zero on the handle classes, `h_j` on `D(j)`.
pub fn base_form(sig: &SurfaceSig, h: &BoundaryFunctional) -> Result<QuadForm, Error> {
    if h.values.len() != sig.boundary_count() {
        return Err(Error::LengthMismatch {
            what: "boundary functional",
            expected: sig.boundary_count(),
            got: h.values.len(),
        });
    }
    if h.parity() != 0 {
        return Err(Error::BoundaryFunctionalOdd);
    }
    let mut base = vec![0u8; sig.b1()];
    base[2 * sig.genus()..].copy_from_slice(&h.values[1..]);
    QuadForm::new(*sig, base)
}

/// Outcome of the orbit decision for two spin structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpinOrbitDecision {
    Equivalent { witness: F2Class },
    Inequivalent,
}

impl SpinOrbitDecision {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, SpinOrbitDecision::Equivalent { .. })
    }
}

/// Decide whether two forms lie in the same mapping-class-group orbit:
/// they do exactly when some class `x` has `w1(x) = 0` and `w2 - w1 = x .`
/// as functionals. The handle part of `x` is forced by the difference; the
/// boundary part is the first radical translate, in lexicographic order,
/// with `w1(x) = 0`. On translates the form is affine-linear, so the first
/// hit is either the forced part itself or its shift by the last boundary
/// basis vector carrying a 1 of `w1`.
pub fn same_orbit(w1: &QuadForm, w2: &QuadForm) -> Result<SpinOrbitDecision, Error> {
    if w1.sig != w2.sig {
        return Err(Error::SurfaceMismatch);
    }
    let sig = w1.sig;
    let g = sig.genus();
    let diff: Vec<u8> = w1.base.iter().zip(&w2.base).map(|(a, b)| a ^ b).collect();

    // the functional (x .) vanishes on every D(j); a difference that does not
    // is not of that shape
    if diff[2 * g..].contains(&1) {
        return Ok(SpinOrbitDecision::Inequivalent);
    }

    // on the handles, (x .)(A(i)) = x_{B(i)} and (x .)(B(i)) = x_{A(i)}
    let mut x = F2Class::zero(&sig);
    for i in 0..g {
        x.bits[2 * i] = diff[2 * i + 1];
        x.bits[2 * i + 1] = diff[2 * i];
    }

    if w1.eval(&x)? == 0 {
        return Ok(SpinOrbitDecision::Equivalent { witness: x });
    }
    // w1(x + d) = w1(x) + w1(d) for radical d, and w1 is linear on the
    // radical; tuples supported after position j all evaluate to 0 there
    if let Some(k) = w1.base[2 * g..].iter().rposition(|&b| b == 1) {
        x.bits[2 * g + k] = 1;
        debug_assert_eq!(w1.eval(&x)?, 0);
        return Ok(SpinOrbitDecision::Equivalent { witness: x });
    }
    Ok(SpinOrbitDecision::Inequivalent)
}

/// Number of orbits restricting to the boundary functional `h`:
/// zero when the component sum is odd, two when `h = 0` on a positive-genus
/// surface (split by Arf), one otherwise.
pub fn orbit_count(sig: &SurfaceSig, h: &BoundaryFunctional) -> Result<u8, Error> {
    if h.values.len() != sig.boundary_count() {
        return Err(Error::LengthMismatch {
            what: "boundary functional",
            expected: sig.boundary_count(),
            got: h.values.len(),
        });
    }
    if h.parity() != 0 {
        Ok(0)
    } else if !h.is_zero() || sig.genus() == 0 {
        Ok(1)
    } else {
        Ok(2)
    }
}
