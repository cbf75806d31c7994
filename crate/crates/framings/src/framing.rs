//! Absolute framings: rotation-number coordinates, orbit invariants,
//! the mapping-class generator catalog, canonicalization, realization.
//!
//! A framing on the genus-`g`, `n+1`-boundary surface is determined by its
//! rotation numbers on the basis curves. The rotation number on the zeroth
//! boundary component is never stored: the rotation numbers of all boundary
//! components sum to the Euler characteristic, so it is derived.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::spin::QuadForm;
use crate::surface::SurfaceSig;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A mapping class with a known exact affine action on framing coordinates.
///
/// `TwistA`/`TwistB` are the twists along the handle curves. `EvenShiftA`/
/// `EvenShiftB` are the bounding-pair composites available from genus 2 on;
/// they shift a single handle coordinate by two. `MixBoundary` is the genus-1
/// composite of a handle twist and a twist along the band-sum of the handle
/// curve with a boundary component; it adds a boundary profile entry into the
/// second handle coordinate. Boundary coordinates are fixed by every
/// generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    TwistA { i: usize, sign: Sign },
    TwistB { i: usize, sign: Sign },
    EvenShiftA { i: usize, sign: Sign },
    EvenShiftB { i: usize, sign: Sign },
    MixBoundary { j: usize, sign: Sign },
}

impl Generator {
    pub fn inverse(self) -> Generator {
        match self {
            Generator::TwistA { i, sign } => Generator::TwistA { i, sign: sign.flip() },
            Generator::TwistB { i, sign } => Generator::TwistB { i, sign: sign.flip() },
            Generator::EvenShiftA { i, sign } => Generator::EvenShiftA { i, sign: sign.flip() },
            Generator::EvenShiftB { i, sign } => Generator::EvenShiftB { i, sign: sign.flip() },
            Generator::MixBoundary { j, sign } => Generator::MixBoundary { j, sign: sign.flip() },
        }
    }

    /// Every generator instance valid on `sig`, both signs.
    pub fn catalog(sig: &SurfaceSig) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 1..=sig.genus() {
            for sign in [Sign::Pos, Sign::Neg] {
                out.push(Generator::TwistA { i, sign });
                out.push(Generator::TwistB { i, sign });
                if sig.genus() >= 2 {
                    out.push(Generator::EvenShiftA { i, sign });
                    out.push(Generator::EvenShiftB { i, sign });
                }
            }
        }
        if sig.genus() == 1 {
            for j in 1..=sig.n() {
                for sign in [Sign::Pos, Sign::Neg] {
                    out.push(Generator::MixBoundary { j, sign });
                }
            }
        }
        out
    }

    fn check(&self, sig: &SurfaceSig) -> Result<(), Error> {
        let ok = match *self {
            Generator::TwistA { i, .. } | Generator::TwistB { i, .. } => i >= 1 && i <= sig.genus(),
            Generator::EvenShiftA { i, .. } | Generator::EvenShiftB { i, .. } => {
                sig.genus() >= 2 && i >= 1 && i <= sig.genus()
            }
            Generator::MixBoundary { j, .. } => sig.genus() == 1 && j >= 1 && j <= sig.n(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::GeneratorNotApplicable {
                generator: format!("{:?}", self),
                genus: sig.genus(),
                boundary: sig.boundary_count(),
            })
        }
    }
}

pub type GeneratorWord = Vec<Generator>;

/// Reverse a word and flip every sign, so that replaying the result undoes it.
pub fn invert_word(word: &[Generator]) -> GeneratorWord {
    word.iter().rev().map(|g| g.inverse()).collect()
}

/// The vector `(rot(boundary_j) + 1)` over all `n+1` boundary components.
/// Its entries always sum to `2 - 2g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryProfile {
    pub nu: Vec<BigInt>,
}

impl BoundaryProfile {
    pub fn gcd(&self) -> BigInt {
        self.nu.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
    }

    pub fn all_even(&self) -> bool {
        self.nu.iter().all(|v| !v.bit(0))
    }
}

/// Complete orbit invariant of a framing, keyed by genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrbitKey {
    Genus0 {
        nu: Vec<BigInt>,
    },
    Genus1 {
        nu: Vec<BigInt>,
        a_tilde: BigInt,
    },
    /// `arf` is present exactly when every profile entry is even.
    GenusHigh {
        nu: Vec<BigInt>,
        arf: Option<u8>,
    },
}

/// An absolute framing in rotation-number coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Framing {
    sig: SurfaceSig,
    rot_a: Vec<BigInt>,
    rot_b: Vec<BigInt>,
    rot_d: Vec<BigInt>,
}

impl Framing {
    pub fn new(
        sig: SurfaceSig,
        rot_a: Vec<BigInt>,
        rot_b: Vec<BigInt>,
        rot_d: Vec<BigInt>,
    ) -> Result<Self, Error> {
        if rot_a.len() != sig.genus() || rot_b.len() != sig.genus() {
            return Err(Error::LengthMismatch {
                what: "handle rotation numbers",
                expected: sig.genus(),
                got: rot_a.len().max(rot_b.len()),
            });
        }
        if rot_d.len() != sig.n() {
            return Err(Error::LengthMismatch {
                what: "boundary rotation numbers",
                expected: sig.n(),
                got: rot_d.len(),
            });
        }
        Ok(Framing {
            sig,
            rot_a,
            rot_b,
            rot_d,
        })
    }

    pub fn sig(&self) -> &SurfaceSig {
        &self.sig
    }

    pub fn rot_a(&self) -> &[BigInt] {
        &self.rot_a
    }

    pub fn rot_b(&self) -> &[BigInt] {
        &self.rot_b
    }

    pub fn rot_d(&self) -> &[BigInt] {
        &self.rot_d
    }

    /// Rotation number of the zeroth boundary component, derived from the
    /// Euler characteristic: the boundary rotation numbers sum to `chi`.
    pub fn rot_boundary_0(&self) -> BigInt {
        let sum: BigInt = self.rot_d.iter().sum();
        BigInt::from(self.sig.euler_characteristic()) - sum
    }

    pub fn nu_profile(&self) -> BoundaryProfile {
        let mut nu = Vec::with_capacity(self.sig.boundary_count());
        nu.push(self.rot_boundary_0() + 1);
        for r in &self.rot_d {
            nu.push(r + 1);
        }
        BoundaryProfile { nu }
    }

    /// Arf invariant of the mod-2 reduction, defined when every boundary
    /// profile entry is even.
    pub fn arf(&self) -> Result<u8, Error> {
        let profile = self.nu_profile();
        for (j, v) in profile.nu.iter().enumerate() {
            if v.bit(0) {
                return Err(Error::FramingArfUndefined { j, nu: v.clone() });
            }
        }
        Ok(handle_arf(&self.rot_a, &self.rot_b))
    }

    /// The spin structure underlying this framing: base value `rot + 1` mod 2
    /// on each basis curve.
    pub fn spin(&self) -> QuadForm {
        let mut base = Vec::with_capacity(self.sig.b1());
        for i in 0..self.sig.genus() {
            base.push(if self.rot_a[i].bit(0) { 0 } else { 1 });
            base.push(if self.rot_b[i].bit(0) { 0 } else { 1 });
        }
        for r in &self.rot_d {
            base.push(if r.bit(0) { 0 } else { 1 });
        }
        QuadForm::new(self.sig, base).expect("base length matches b1")
    }

    /// The non-negative generator of the ideal of rotation numbers of
    /// non-separating simple closed curves: absent for genus 0, the gcd of
    /// the handle rotation numbers and the boundary profile for genus 1,
    /// constantly 1 from genus 2 on.
    pub fn a_tilde(&self) -> Option<BigInt> {
        match self.sig.genus() {
            0 => None,
            1 => {
                let mut acc = self.rot_a[0].gcd(&self.rot_b[0]);
                for v in self.nu_profile().nu {
                    acc = acc.gcd(&v);
                }
                Some(acc)
            }
            _ => Some(BigInt::one()),
        }
    }

    pub fn orbit_key(&self) -> OrbitKey {
        let profile = self.nu_profile();
        match self.sig.genus() {
            0 => OrbitKey::Genus0 { nu: profile.nu },
            1 => OrbitKey::Genus1 {
                a_tilde: self.a_tilde().expect("genus 1"),
                nu: profile.nu,
            },
            _ => {
                let arf = if profile.all_even() {
                    Some(handle_arf(&self.rot_a, &self.rot_b))
                } else {
                    None
                };
                OrbitKey::GenusHigh {
                    nu: profile.nu,
                    arf,
                }
            }
        }
    }

    /// Two framings lie in the same mapping-class-group orbit exactly when
    /// their orbit keys agree.
    pub fn same_orbit(&self, other: &Framing) -> Result<bool, Error> {
        if self.sig != other.sig {
            return Err(Error::SurfaceMismatch);
        }
        Ok(self.orbit_key() == other.orbit_key())
    }

    /// Apply one generator. Boundary coordinates are fixed by every generator.
    pub fn apply(&self, gen: &Generator) -> Result<Framing, Error> {
        gen.check(&self.sig)?;
        let mut out = self.clone();
        match *gen {
            Generator::TwistA { i, sign } => {
                let delta = &out.rot_a[i - 1];
                out.rot_b[i - 1] = match sign {
                    Sign::Pos => &out.rot_b[i - 1] - delta,
                    Sign::Neg => &out.rot_b[i - 1] + delta,
                };
            }
            Generator::TwistB { i, sign } => {
                let delta = &out.rot_b[i - 1];
                out.rot_a[i - 1] = match sign {
                    Sign::Pos => &out.rot_a[i - 1] + delta,
                    Sign::Neg => &out.rot_a[i - 1] - delta,
                };
            }
            Generator::EvenShiftA { i, sign } => {
                let two = BigInt::from(2);
                out.rot_a[i - 1] = match sign {
                    Sign::Pos => &out.rot_a[i - 1] + two,
                    Sign::Neg => &out.rot_a[i - 1] - two,
                };
            }
            Generator::EvenShiftB { i, sign } => {
                let two = BigInt::from(2);
                out.rot_b[i - 1] = match sign {
                    Sign::Pos => &out.rot_b[i - 1] + two,
                    Sign::Neg => &out.rot_b[i - 1] - two,
                };
            }
            Generator::MixBoundary { j, sign } => {
                let nu_j = &self.rot_d[j - 1] + 1;
                out.rot_b[0] = match sign {
                    Sign::Pos => &out.rot_b[0] - nu_j,
                    Sign::Neg => &out.rot_b[0] + nu_j,
                };
            }
        }
        Ok(out)
    }

    pub fn apply_word(&self, word: &[Generator]) -> Result<Framing, Error> {
        let mut cur = self.clone();
        for gen in word {
            cur = cur.apply(gen)?;
        }
        Ok(cur)
    }

    /// The canonical representative of this framing's orbit, with a witness
    /// word for genus at most 1. For genus 0 the framing is already canonical.
    /// For genus 1 the handle coordinates are reduced to `(a_tilde, 0)` by the
    /// Euclidean algorithm interleaved with boundary-mixing moves. From genus
    /// 2 on the representative is the lexicographically least 0/1 handle
    /// vector matching the Arf invariant when defined; no word is produced.
    pub fn canonicalize(&self) -> (Framing, Option<GeneratorWord>) {
        match self.sig.genus() {
            0 => (self.clone(), Some(Vec::new())),
            1 => {
                let mut red = Reducer {
                    f: self.clone(),
                    word: Vec::new(),
                };
                red.euclid();
                red.mix_to_a_tilde();
                (red.f, Some(red.word))
            }
            _ => {
                let target_arf = self.arf().ok();
                let canon = canonical_high_genus(&self.sig, &self.rot_d, target_arf);
                (canon, None)
            }
        }
    }
}

fn handle_arf(rot_a: &[BigInt], rot_b: &[BigInt]) -> u8 {
    let mut acc = 0u8;
    for (a, b) in rot_a.iter().zip(rot_b) {
        let term = u8::from(!a.bit(0)) & u8::from(!b.bit(0));
        acc ^= term;
    }
    acc
}

/// Lexicographically least handle vector `(a_1, b_1, ..., a_g, b_g)` in
/// {0,1} with the requested Arf: all zeros has Arf `g mod 2`; otherwise the
/// final `b_g` is set to 1, killing the last handle's term.
fn canonical_high_genus(sig: &SurfaceSig, rot_d: &[BigInt], arf: Option<u8>) -> Framing {
    let g = sig.genus();
    let rot_a = vec![BigInt::zero(); g];
    let mut rot_b = vec![BigInt::zero(); g];
    if let Some(t) = arf {
        if (g % 2) as u8 != t {
            rot_b[g - 1] = BigInt::one();
        }
    }
    Framing::new(*sig, rot_a, rot_b, rot_d.to_vec()).expect("lengths fixed")
}

/// Genus-1 reduction engine: applies generators and records the word.
struct Reducer {
    f: Framing,
    word: Vec<Generator>,
}

impl Reducer {
    fn push(&mut self, gen: Generator) {
        self.f = self.f.apply(&gen).expect("generator valid during reduction");
        self.word.push(gen);
    }

    fn a(&self) -> BigInt {
        self.f.rot_a[0].clone()
    }

    fn b(&self) -> BigInt {
        self.f.rot_b[0].clone()
    }

    /// Reduce the handle pair to `(d, 0)` with `d >= 0` by subtractive
    /// Euclidean steps; `d` is the gcd of the pair.
    fn euclid(&mut self) {
        loop {
            let a = self.a();
            let b = self.b();
            if b.is_zero() {
                break;
            }
            if a.is_zero() {
                // (0, b) -> (b, b) -> (b, 0)
                self.push(Generator::TwistB { i: 1, sign: Sign::Pos });
                self.push(Generator::TwistA { i: 1, sign: Sign::Pos });
                continue;
            }
            let same_sign = a.is_positive() == b.is_positive();
            if a.magnitude() >= b.magnitude() {
                let sign = if same_sign { Sign::Neg } else { Sign::Pos };
                self.push(Generator::TwistB { i: 1, sign });
            } else {
                let sign = if same_sign { Sign::Pos } else { Sign::Neg };
                self.push(Generator::TwistA { i: 1, sign });
            }
        }
        if self.a().is_negative() {
            // quarter turn applied twice negates the handle pair
            for _ in 0..2 {
                self.push(Generator::TwistA { i: 1, sign: Sign::Pos });
                self.push(Generator::TwistB { i: 1, sign: Sign::Pos });
                self.push(Generator::TwistA { i: 1, sign: Sign::Pos });
            }
        }
    }

    /// From `(d, 0)`, repeatedly fold a boundary profile entry not divisible
    /// by `d` into the handle and re-reduce, until `d` divides every entry.
    /// The result is `(a_tilde, 0)`.
    fn mix_to_a_tilde(&mut self) {
        loop {
            let d = self.a();
            let nu = self.f.nu_profile().nu;
            let pick = (1..nu.len()).find(|&j| {
                if d.is_zero() {
                    !nu[j].is_zero()
                } else {
                    !(&nu[j] % &d).is_zero()
                }
            });
            match pick {
                None => break,
                Some(j) => {
                    self.push(Generator::MixBoundary { j, sign: Sign::Neg });
                    self.euclid();
                }
            }
        }
    }
}

/// If `to` differs from `from` by an even interior shift (and has the same
/// boundary coordinates), the word of even shifts carrying one to the other.
/// Available from genus 2 on, where the shift generators exist; for lower
/// genus only the trivial difference yields a (empty) word.
pub fn even_shift_word(from: &Framing, to: &Framing) -> Option<GeneratorWord> {
    if from.sig() != to.sig() || from.rot_d() != to.rot_d() {
        return None;
    }
    if from == to {
        return Some(Vec::new());
    }
    if from.sig().genus() < 2 {
        return None;
    }
    let mut word = Vec::new();
    for i in 0..from.sig().genus() {
        for (make, cur, tgt) in [
            (
                true,
                &from.rot_a[i],
                &to.rot_a[i],
            ),
            (
                false,
                &from.rot_b[i],
                &to.rot_b[i],
            ),
        ] {
            let diff = tgt - cur;
            if diff.bit(0) {
                return None;
            }
            let sign = if diff.is_negative() { Sign::Neg } else { Sign::Pos };
            let count = {
                use num_traits::ToPrimitive;
                let half: BigInt = diff.abs() / 2;
                half.to_u64()?
            };
            for _ in 0..count {
                word.push(if make {
                    Generator::EvenShiftA { i: i + 1, sign }
                } else {
                    Generator::EvenShiftB { i: i + 1, sign }
                });
            }
        }
    }
    Some(word)
}

/// Decide equivalence and, where the catalog supports it, produce a witness
/// word from `f1` to `f2`: for genus at most 1 by joining canonical words,
/// from genus 2 on only when the framings agree mod 2 on the interior (the
/// even-lattice part of the reduction).
pub fn equivalence_witness(
    f1: &Framing,
    f2: &Framing,
) -> Result<(bool, Option<GeneratorWord>), Error> {
    if !f1.same_orbit(f2)? {
        return Ok((false, None));
    }
    if f1.sig().genus() <= 1 {
        let (c1, w1) = f1.canonicalize();
        let (c2, w2) = f2.canonicalize();
        debug_assert_eq!(c1, c2);
        let mut word = w1.expect("low genus always yields a word");
        word.extend(invert_word(&w2.expect("low genus always yields a word")));
        debug_assert_eq!(f1.apply_word(&word).expect("replay"), *f2);
        return Ok((true, Some(word)));
    }
    Ok((true, even_shift_word(f1, f2)))
}

/// Construct a framing with the requested orbit key, or report why none
/// exists. The boundary rotation numbers come from the profile; genus-1
/// handles are `(a_tilde, 0)`, higher-genus handles the canonical 0/1 lift.
pub fn realize(sig: &SurfaceSig, key: &OrbitKey) -> Result<Framing, Error> {
    let nu = match key {
        OrbitKey::Genus0 { nu } => nu,
        OrbitKey::Genus1 { nu, .. } => nu,
        OrbitKey::GenusHigh { nu, .. } => nu,
    };
    let variant_ok = match key {
        OrbitKey::Genus0 { .. } => sig.genus() == 0,
        OrbitKey::Genus1 { .. } => sig.genus() == 1,
        OrbitKey::GenusHigh { .. } => sig.genus() >= 2,
    };
    if !variant_ok {
        return Err(Error::KeyVariantMismatch { genus: sig.genus() });
    }
    if nu.len() != sig.boundary_count() {
        return Err(Error::LengthMismatch {
            what: "boundary profile",
            expected: sig.boundary_count(),
            got: nu.len(),
        });
    }
    let expected = BigInt::from(2 - 2 * sig.genus() as i64);
    let got: BigInt = nu.iter().sum();
    if got != expected {
        return Err(Error::InfeasibleProfileSum { expected, got });
    }
    let rot_d: Vec<BigInt> = nu[1..].iter().map(|v| v - 1).collect();

    match key {
        OrbitKey::Genus0 { .. } => Framing::new(*sig, vec![], vec![], rot_d),
        OrbitKey::Genus1 { a_tilde, .. } => {
            let gcd_nu = nu.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            let feasible = if gcd_nu.is_zero() {
                !a_tilde.is_negative()
            } else {
                a_tilde.is_positive() && (&gcd_nu % a_tilde).is_zero()
            };
            if !feasible {
                return Err(Error::InfeasibleATilde {
                    a_tilde: a_tilde.clone(),
                    gcd_nu,
                });
            }
            Framing::new(*sig, vec![a_tilde.clone()], vec![BigInt::zero()], rot_d)
        }
        OrbitKey::GenusHigh { arf, .. } => {
            let all_even = nu.iter().all(|v| !v.bit(0));
            if arf.is_some() != all_even {
                return Err(Error::InfeasibleArfPresence);
            }
            Ok(canonical_high_genus(sig, &rot_d, *arf))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::same_orbit as spin_same_orbit;

    fn sig(g: usize, b: usize) -> SurfaceSig {
        SurfaceSig::new(g, b).unwrap()
    }

    fn fr(g: usize, b: usize, a: &[i64], bb: &[i64], d: &[i64]) -> Framing {
        Framing::new(
            sig(g, b),
            a.iter().map(|&v| v.into()).collect(),
            bb.iter().map(|&v| v.into()).collect(),
            d.iter().map(|&v| v.into()).collect(),
        )
        .unwrap()
    }

    fn nums(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| v.into()).collect()
    }

    #[test]
    fn nu_profile_examples() {
        assert_eq!(fr(1, 1, &[0], &[0], &[]).nu_profile().nu, nums(&[0]));
        assert_eq!(fr(0, 2, &[], &[], &[1]).nu_profile().nu, nums(&[0, 2]));
        assert_eq!(fr(2, 1, &[0, 0], &[0, 0], &[]).nu_profile().nu, nums(&[-2]));
    }

    #[test]
    fn profile_sums_to_two_minus_twice_genus() {
        for f in [
            fr(1, 3, &[5], &[-2], &[3, -4]),
            fr(0, 4, &[], &[], &[7, 0, -2]),
            fr(3, 2, &[1, 2, 3], &[4, 5, 6], &[9]),
        ] {
            let total: BigInt = f.nu_profile().nu.iter().sum();
            assert_eq!(total, BigInt::from(2 - 2 * f.sig().genus() as i64));
        }
    }

    #[test]
    fn arf_examples() {
        assert_eq!(fr(1, 1, &[0], &[0], &[]).arf().unwrap(), 1);
        assert_eq!(fr(2, 1, &[0, 0], &[0, 0], &[]).arf().unwrap(), 0);
        assert_eq!(fr(2, 1, &[1, 0], &[1, 0], &[]).arf().unwrap(), 1);
        // odd profile entry: undefined
        assert!(fr(1, 2, &[0], &[0], &[0]).arf().is_err());
    }

    #[test]
    fn spin_examples() {
        assert_eq!(fr(1, 1, &[0], &[0], &[]).spin().base(), &[1, 1]);
        assert_eq!(fr(1, 1, &[2], &[4], &[]).spin().base(), &[1, 1]);
        assert_eq!(fr(1, 2, &[1], &[0], &[1]).spin().base(), &[0, 1, 0]);
    }

    #[test]
    fn a_tilde_examples() {
        assert_eq!(fr(1, 1, &[6], &[4], &[]).a_tilde(), Some(BigInt::from(2)));
        assert_eq!(fr(1, 2, &[2], &[4], &[1]).a_tilde(), Some(BigInt::from(2)));
        assert_eq!(fr(2, 1, &[9, 3], &[14, 5], &[]).a_tilde(), Some(BigInt::one()));
        assert_eq!(fr(0, 2, &[], &[], &[5]).a_tilde(), None);
    }

    #[test]
    fn orbit_key_examples() {
        assert_eq!(
            fr(0, 3, &[], &[], &[0, 1]).orbit_key(),
            OrbitKey::Genus0 { nu: nums(&[-1, 1, 2]) }
        );
        assert_eq!(
            fr(1, 1, &[6], &[4], &[]).orbit_key(),
            OrbitKey::Genus1 { nu: nums(&[0]), a_tilde: 2.into() }
        );
        assert_eq!(
            fr(2, 1, &[1, 0], &[1, 0], &[]).orbit_key(),
            OrbitKey::GenusHigh { nu: nums(&[-2]), arf: Some(1) }
        );
    }

    #[test]
    fn same_orbit_examples() {
        assert!(fr(1, 1, &[6], &[4], &[])
            .same_orbit(&fr(1, 1, &[2], &[0], &[]))
            .unwrap());
        assert!(!fr(1, 1, &[2], &[0], &[])
            .same_orbit(&fr(1, 1, &[1], &[0], &[]))
            .unwrap());
        assert!(!fr(2, 1, &[0, 0], &[0, 0], &[])
            .same_orbit(&fr(2, 1, &[1, 0], &[1, 0], &[]))
            .unwrap());
    }

    #[test]
    fn apply_examples() {
        let f = fr(1, 1, &[6], &[4], &[]);
        let t = f.apply(&Generator::TwistA { i: 1, sign: Sign::Pos }).unwrap();
        assert_eq!((t.rot_a[0].clone(), t.rot_b[0].clone()), (6.into(), (-2).into()));

        let f = fr(2, 1, &[0, 0], &[0, 0], &[]);
        let t = f.apply(&Generator::EvenShiftB { i: 1, sign: Sign::Pos }).unwrap();
        assert_eq!(t.rot_b, nums(&[2, 0]));
        assert_eq!(t.rot_a, nums(&[0, 0]));

        let f = fr(1, 2, &[2], &[4], &[1]);
        let t = f.apply(&Generator::MixBoundary { j: 1, sign: Sign::Pos }).unwrap();
        assert_eq!(t.rot_a, nums(&[2]));
        assert_eq!(t.rot_b, nums(&[2]));
        assert_eq!(t.rot_d, nums(&[1]));
    }

    #[test]
    fn generator_errors() {
        let f = fr(1, 1, &[0], &[0], &[]);
        assert!(f.apply(&Generator::EvenShiftA { i: 1, sign: Sign::Pos }).is_err());
        assert!(f.apply(&Generator::MixBoundary { j: 1, sign: Sign::Pos }).is_err());
        let f2 = fr(2, 1, &[0, 0], &[0, 0], &[]);
        assert!(f2.apply(&Generator::MixBoundary { j: 1, sign: Sign::Pos }).is_err());
        assert!(f2.apply(&Generator::TwistA { i: 3, sign: Sign::Pos }).is_err());
    }

    #[test]
    fn inverses_cancel() {
        let f = fr(1, 2, &[3], &[-5], &[2]);
        for gen in Generator::catalog(f.sig()) {
            let back = f.apply(&gen).unwrap().apply(&gen.inverse()).unwrap();
            assert_eq!(back, f, "{:?}", gen);
        }
        let f = fr(2, 1, &[3, 1], &[-5, 7], &[]);
        for gen in Generator::catalog(f.sig()) {
            let back = f.apply(&gen).unwrap().apply(&gen.inverse()).unwrap();
            assert_eq!(back, f, "{:?}", gen);
        }
    }

    #[test]
    fn generators_preserve_invariants() {
        let f = fr(1, 2, &[6], &[4], &[3]);
        for gen in Generator::catalog(f.sig()) {
            let t = f.apply(&gen).unwrap();
            assert_eq!(t.nu_profile(), f.nu_profile());
            assert_eq!(t.a_tilde(), f.a_tilde());
            assert!(spin_same_orbit(&t.spin(), &f.spin()).unwrap().is_equivalent());
        }
        // even profile: Arf also preserved
        let f = fr(1, 2, &[6], &[4], &[1]);
        for gen in Generator::catalog(f.sig()) {
            let t = f.apply(&gen).unwrap();
            assert_eq!(t.arf().unwrap(), f.arf().unwrap());
        }
    }

    #[test]
    fn canonicalize_examples() {
        let f = fr(1, 1, &[6], &[4], &[]);
        let (canon, word) = f.canonicalize();
        assert_eq!(canon, fr(1, 1, &[2], &[0], &[]));
        let word = word.unwrap();
        assert_eq!(f.apply_word(&word).unwrap(), canon);

        let f = fr(1, 2, &[2], &[4], &[1]);
        let (canon, word) = f.canonicalize();
        assert_eq!(canon, fr(1, 2, &[2], &[0], &[1]));
        assert_eq!(f.apply_word(&word.unwrap()).unwrap(), canon);

        let f = fr(0, 3, &[], &[], &[4, -1]);
        let (canon, word) = f.canonicalize();
        assert_eq!(canon, f);
        assert!(word.unwrap().is_empty());
    }

    #[test]
    fn canonicalize_uses_mixing_when_handle_gcd_exceeds_a_tilde() {
        // handle gcd 4, profile gcd 2: the canonical handle is (2, 0)
        let f = fr(1, 2, &[4], &[0], &[1]);
        assert_eq!(f.a_tilde(), Some(BigInt::from(2)));
        let (canon, word) = f.canonicalize();
        assert_eq!(canon, fr(1, 2, &[2], &[0], &[1]));
        assert_eq!(f.apply_word(&word.unwrap()).unwrap(), canon);
    }

    #[test]
    fn canonicalize_genus1_zero_class() {
        let f = fr(1, 1, &[0], &[0], &[]);
        let (canon, word) = f.canonicalize();
        assert_eq!(canon, f);
        assert_eq!(f.apply_word(&word.unwrap()).unwrap(), canon);
        // negative handle entries still normalize to a non-negative gcd
        let f = fr(1, 1, &[-6], &[-4], &[]);
        let (canon, word) = f.canonicalize();
        assert_eq!(canon, fr(1, 1, &[2], &[0], &[]));
        assert_eq!(f.apply_word(&word.unwrap()).unwrap(), canon);
    }

    #[test]
    fn canonicalize_high_genus() {
        // all zeros has Arf g mod 2, here 0
        let f = fr(2, 1, &[0, 0], &[0, 2], &[]);
        assert_eq!(f.arf().unwrap(), 0);
        let (canon, word) = f.canonicalize();
        assert!(word.is_none());
        assert_eq!(canon, fr(2, 1, &[0, 0], &[0, 0], &[]));
        assert_eq!(canon.orbit_key(), f.orbit_key());
        // Arf 1 flips the last handle's b in the least lift
        let f = fr(2, 1, &[1, 0], &[1, 0], &[]);
        assert_eq!(f.arf().unwrap(), 1);
        let (canon, _) = f.canonicalize();
        assert_eq!(canon, fr(2, 1, &[0, 0], &[0, 1], &[]));
        assert_eq!(canon.orbit_key(), f.orbit_key());
        // odd profile: Arf undefined, canonical lift is all zeros
        let f = fr(2, 2, &[1, 2], &[3, 4], &[0]);
        let (canon, _) = f.canonicalize();
        assert_eq!(canon, fr(2, 2, &[0, 0], &[0, 0], &[0]));
        assert_eq!(canon.orbit_key(), f.orbit_key());
    }

    #[test]
    fn realize_examples() {
        let s = sig(1, 2);
        let key = OrbitKey::Genus1 { nu: nums(&[-2, 2]), a_tilde: 2.into() };
        let f = realize(&s, &key).unwrap();
        assert_eq!(f, fr(1, 2, &[2], &[0], &[1]));
        assert_eq!(f.orbit_key(), key);

        let bad = OrbitKey::Genus1 { nu: nums(&[-2, 2]), a_tilde: 3.into() };
        assert!(matches!(realize(&s, &bad), Err(Error::InfeasibleATilde { .. })));

        let s = sig(1, 1);
        let key = OrbitKey::Genus1 { nu: nums(&[0]), a_tilde: 0.into() };
        let f = realize(&s, &key).unwrap();
        assert_eq!(f, fr(1, 1, &[0], &[0], &[]));
    }

    #[test]
    fn realize_checks_profile_and_arf_presence() {
        let s = sig(1, 2);
        let bad_sum = OrbitKey::Genus1 { nu: nums(&[0, 1]), a_tilde: 1.into() };
        assert!(matches!(
            realize(&s, &bad_sum),
            Err(Error::InfeasibleProfileSum { .. })
        ));
        let s = sig(2, 1);
        let missing_arf = OrbitKey::GenusHigh { nu: nums(&[-2]), arf: None };
        assert!(matches!(
            realize(&s, &missing_arf),
            Err(Error::InfeasibleArfPresence)
        ));
        let f = realize(&s, &OrbitKey::GenusHigh { nu: nums(&[-2]), arf: Some(1) }).unwrap();
        assert_eq!(f.orbit_key(), OrbitKey::GenusHigh { nu: nums(&[-2]), arf: Some(1) });
        // odd entries forbid a present Arf
        let s = sig(2, 2);
        let odd_with_arf = OrbitKey::GenusHigh { nu: nums(&[-3, 1]), arf: Some(0) };
        assert!(matches!(
            realize(&s, &odd_with_arf),
            Err(Error::InfeasibleArfPresence)
        ));
        let ok = realize(&s, &OrbitKey::GenusHigh { nu: nums(&[-3, 1]), arf: None }).unwrap();
        assert_eq!(ok.orbit_key(), OrbitKey::GenusHigh { nu: nums(&[-3, 1]), arf: None });
    }

    #[test]
    fn genus0_has_no_applicable_generators() {
        let s = sig(0, 3);
        assert!(Generator::catalog(&s).is_empty());
        let f = fr(0, 3, &[], &[], &[1, 2]);
        for gen in [
            Generator::TwistA { i: 1, sign: Sign::Pos },
            Generator::MixBoundary { j: 1, sign: Sign::Pos },
            Generator::EvenShiftA { i: 1, sign: Sign::Pos },
        ] {
            assert!(f.apply(&gen).is_err());
        }
    }

    #[test]
    fn equivalence_witness_paths() {
        // genus 1: canonical words joined into a direct witness
        let f1 = fr(1, 1, &[6], &[4], &[]);
        let f2 = fr(1, 1, &[-2], &[0], &[]);
        let (eq, word) = equivalence_witness(&f1, &f2).unwrap();
        assert!(eq);
        assert_eq!(f1.apply_word(&word.unwrap()).unwrap(), f2);

        // genus 2, equal keys, even difference: an even-shift word
        let f1 = fr(2, 1, &[0, 0], &[0, 0], &[]);
        let f2 = fr(2, 1, &[2, -4], &[0, 2], &[]);
        let (eq, word) = equivalence_witness(&f1, &f2).unwrap();
        assert!(eq);
        assert_eq!(f1.apply_word(&word.unwrap()).unwrap(), f2);

        // genus 2, equal keys, parity mismatch: equivalent but no word
        let f3 = fr(2, 1, &[1, 1], &[1, 1], &[]);
        assert_eq!(f3.arf().unwrap(), 0);
        let (eq, word) = equivalence_witness(&f1, &f3).unwrap();
        assert!(eq);
        assert!(word.is_none());

        // inequivalent
        let f4 = fr(2, 1, &[1, 0], &[1, 0], &[]);
        let (eq, word) = equivalence_witness(&f1, &f4).unwrap();
        assert!(!eq);
        assert!(word.is_none());
    }

    #[test]
    fn word_inversion_round_trips() {
        let f = fr(1, 2, &[6], &[4], &[2]);
        let word = vec![
            Generator::TwistA { i: 1, sign: Sign::Pos },
            Generator::MixBoundary { j: 1, sign: Sign::Neg },
            Generator::TwistB { i: 1, sign: Sign::Pos },
        ];
        let there = f.apply_word(&word).unwrap();
        assert_eq!(there.apply_word(&invert_word(&word)).unwrap(), f);
    }
}
