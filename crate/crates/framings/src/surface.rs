//! Surface model: signature, homology basis, intersection pairing.
//!
//! The surface of genus `g` with `n+1` boundary components carries the fixed
//! curve system `{alpha_i, beta_i}` on the handles plus the boundary curves
//! `d_1 .. d_n`; their classes form the basis of first homology in the order
//! `(A(1), B(1), ..., A(g), B(g), D(1), ..., D(n))`. The zeroth boundary
//! component is dependent: its class is minus the sum of the others.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::Error;

/// Genus and boundary-component count of a compact oriented surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceSig {
    genus: usize,
    boundary: usize,
}

impl SurfaceSig {
    /// A surface must have at least one boundary component.
    pub fn new(genus: usize, boundary: usize) -> Result<Self, Error> {
        if boundary == 0 {
            return Err(Error::InvalidSurface { boundary });
        }
        Ok(SurfaceSig { genus, boundary })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of boundary components, `n+1`.
    pub fn boundary_count(&self) -> usize {
        self.boundary
    }

    /// The `n` in `Sigma_{g,n+1}`: number of independent boundary classes.
    pub fn n(&self) -> usize {
        self.boundary - 1
    }

    /// First Betti number `2g + n`.
    pub fn b1(&self) -> usize {
        2 * self.genus + self.n()
    }

    /// Euler characteristic `1 - 2g - n`.
    pub fn euler_characteristic(&self) -> i64 {
        1 - 2 * self.genus as i64 - self.n() as i64
    }

    fn check_len(&self, what: &'static str, got: usize) -> Result<(), Error> {
        if got != self.b1() {
            return Err(Error::LengthMismatch {
                what,
                expected: self.b1(),
                got,
            });
        }
        Ok(())
    }
}

/// Position of a basis element: `A(i)`/`B(i)` for the handle curves
/// (`1 <= i <= g`), `D(j)` for the boundary curve `d_j` (`1 <= j <= n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisIndex {
    A(usize),
    B(usize),
    D(usize),
}

impl BasisIndex {
    /// Offset of this basis element in coordinate vectors.
    pub fn position(&self, sig: &SurfaceSig) -> Result<usize, Error> {
        match *self {
            BasisIndex::A(i) if i >= 1 && i <= sig.genus() => Ok(2 * (i - 1)),
            BasisIndex::B(i) if i >= 1 && i <= sig.genus() => Ok(2 * (i - 1) + 1),
            BasisIndex::D(j) if j >= 1 && j <= sig.n() => Ok(2 * sig.genus() + (j - 1)),
            BasisIndex::A(i) | BasisIndex::B(i) => Err(Error::BasisIndexOutOfRange {
                index: i,
                max: sig.genus(),
            }),
            BasisIndex::D(j) => Err(Error::BasisIndexOutOfRange {
                index: j,
                max: sig.n(),
            }),
        }
    }

    /// All basis indices for `sig`, in coordinate order.
    pub fn all(sig: &SurfaceSig) -> Vec<BasisIndex> {
        let mut out = Vec::with_capacity(sig.b1());
        for i in 1..=sig.genus() {
            out.push(BasisIndex::A(i));
            out.push(BasisIndex::B(i));
        }
        for j in 1..=sig.n() {
            out.push(BasisIndex::D(j));
        }
        out
    }
}

/// An integral homology class in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntClass {
    pub coords: Vec<BigInt>,
}

impl IntClass {
    pub fn zero(sig: &SurfaceSig) -> Self {
        IntClass {
            coords: vec![BigInt::zero(); sig.b1()],
        }
    }

    pub fn basis(sig: &SurfaceSig, idx: BasisIndex) -> Result<Self, Error> {
        let mut v = Self::zero(sig);
        v.coords[idx.position(sig)?] = BigInt::from(1);
        Ok(v)
    }

    pub fn reduce_mod2(&self) -> F2Class {
        F2Class {
            bits: self
                .coords
                .iter()
                .map(|c| if c.bit(0) { 1 } else { 0 })
                .collect(),
        }
    }
}

/// A mod-2 homology class: a bit per basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Class {
    pub bits: Vec<u8>,
}

impl F2Class {
    pub fn zero(sig: &SurfaceSig) -> Self {
        F2Class {
            bits: vec![0; sig.b1()],
        }
    }

    pub fn basis(sig: &SurfaceSig, idx: BasisIndex) -> Result<Self, Error> {
        let mut v = Self::zero(sig);
        v.bits[idx.position(sig)?] = 1;
        Ok(v)
    }

    pub fn from_bits(sig: &SurfaceSig, bits: Vec<u8>) -> Result<Self, Error> {
        sig.check_len("class coordinates", bits.len())?;
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::NotABit);
        }
        Ok(F2Class { bits })
    }

    pub fn add(&self, other: &F2Class) -> F2Class {
        F2Class {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }
}

/// Algebraic intersection number. Only the handle pairs `(A(i), B(i))`
/// contribute; boundary classes lie in the radical. Sign convention:
/// `alpha_i . beta_i = +1`.
pub fn intersection(sig: &SurfaceSig, x: &IntClass, y: &IntClass) -> Result<BigInt, Error> {
    sig.check_len("intersection operand", x.coords.len())?;
    sig.check_len("intersection operand", y.coords.len())?;
    let mut acc = BigInt::zero();
    for i in 0..sig.genus() {
        let (a, b) = (2 * i, 2 * i + 1);
        acc += &x.coords[a] * &y.coords[b] - &x.coords[b] * &y.coords[a];
    }
    Ok(acc)
}

/// Mod-2 intersection pairing (symmetric).
pub fn intersection_mod2(sig: &SurfaceSig, x: &F2Class, y: &F2Class) -> Result<u8, Error> {
    sig.check_len("intersection operand", x.bits.len())?;
    sig.check_len("intersection operand", y.bits.len())?;
    let mut acc = 0u8;
    for i in 0..sig.genus() {
        let (a, b) = (2 * i, 2 * i + 1);
        acc ^= (x.bits[a] & y.bits[b]) ^ (x.bits[b] & y.bits[a]);
    }
    Ok(acc)
}

/// The class of the `j`-th boundary component, `0 <= j <= n`, integrally and
/// mod 2. For `j >= 1` this is the basis vector `D(j)`; the classes sum to
/// zero, so `j = 0` yields minus the sum of the others.
pub fn boundary_class(sig: &SurfaceSig, j: usize) -> Result<(IntClass, F2Class), Error> {
    if j > sig.n() {
        return Err(Error::BoundaryIndexOutOfRange {
            index: j,
            max: sig.n(),
        });
    }
    if j >= 1 {
        let int = IntClass::basis(sig, BasisIndex::D(j))?;
        let f2 = int.reduce_mod2();
        Ok((int, f2))
    } else {
        let mut int = IntClass::zero(sig);
        for k in 1..=sig.n() {
            int.coords[BasisIndex::D(k).position(sig)?] = BigInt::from(-1);
        }
        let f2 = int.reduce_mod2();
        Ok((int, f2))
    }
}

/// The image of the mod-2 fundamental class of the boundary: zero in the
/// surface (the components sum to zero), together with the all-ones indicator
/// of length `n+1` representing it on the boundary itself.
pub fn boundary_fundamental_class_mod2(sig: &SurfaceSig) -> (F2Class, Vec<u8>) {
    (F2Class::zero(sig), vec![1; sig.boundary_count()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: usize, b: usize) -> SurfaceSig {
        SurfaceSig::new(g, b).unwrap()
    }

    #[test]
    fn surface_invariants() {
        let s = sig(1, 2);
        assert_eq!(s.b1(), 3);
        assert_eq!(s.euler_characteristic(), -2);
        assert_eq!(sig(1, 1).euler_characteristic(), -1);
        assert_eq!(sig(0, 2).euler_characteristic(), 0);
        assert_eq!(sig(2, 1).euler_characteristic(), -3);
        assert!(SurfaceSig::new(1, 0).is_err());
    }

    #[test]
    fn intersection_pairing() {
        let s = sig(1, 2);
        let a1 = IntClass::basis(&s, BasisIndex::A(1)).unwrap();
        let b1 = IntClass::basis(&s, BasisIndex::B(1)).unwrap();
        let d1 = IntClass::basis(&s, BasisIndex::D(1)).unwrap();
        assert_eq!(intersection(&s, &a1, &b1).unwrap(), BigInt::from(1));
        assert_eq!(intersection(&s, &b1, &a1).unwrap(), BigInt::from(-1));
        assert_eq!(intersection(&s, &a1, &a1).unwrap(), BigInt::from(0));
        assert_eq!(intersection(&s, &d1, &b1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn intersection_mod2_examples() {
        let s = sig(1, 2);
        let a1 = F2Class::basis(&s, BasisIndex::A(1)).unwrap();
        let b1 = F2Class::basis(&s, BasisIndex::B(1)).unwrap();
        let d1 = F2Class::basis(&s, BasisIndex::D(1)).unwrap();
        assert_eq!(intersection_mod2(&s, &a1, &b1).unwrap(), 1);
        let ab = a1.add(&b1);
        assert_eq!(intersection_mod2(&s, &ab, &ab).unwrap(), 0);
        assert_eq!(intersection_mod2(&s, &a1.add(&d1), &b1).unwrap(), 1);
    }

    #[test]
    fn intersection_rejects_length_mismatch() {
        let s = sig(1, 1);
        let x = IntClass::zero(&s);
        let bad = IntClass {
            coords: vec![BigInt::zero(); 5],
        };
        assert!(intersection(&s, &x, &bad).is_err());
    }

    #[test]
    fn boundary_classes() {
        let s = sig(1, 2);
        let (int1, f2_1) = boundary_class(&s, 1).unwrap();
        assert_eq!(int1.coords, vec![0.into(), 0.into(), 1.into()]);
        assert_eq!(f2_1.bits, vec![0, 0, 1]);
        let (int0, f2_0) = boundary_class(&s, 0).unwrap();
        assert_eq!(int0.coords, vec![0.into(), 0.into(), (-1).into()]);
        assert_eq!(f2_0.bits, vec![0, 0, 1]);

        let s02 = sig(0, 3);
        let (int0, _) = boundary_class(&s02, 0).unwrap();
        assert_eq!(int0.coords, vec![(-1).into(), (-1).into()]);
        assert!(boundary_class(&s02, 3).is_err());
    }

    #[test]
    fn boundary_fundamental_class() {
        let (img, ind) = boundary_fundamental_class_mod2(&sig(1, 1));
        assert!(img.is_zero());
        assert_eq!(ind, vec![1]);
        let (img, ind) = boundary_fundamental_class_mod2(&sig(0, 3));
        assert!(img.is_zero());
        assert_eq!(ind, vec![1, 1, 1]);
        let (img, ind) = boundary_fundamental_class_mod2(&sig(1, 2));
        assert!(img.is_zero());
        assert_eq!(ind, vec![1, 1]);
    }

    #[test]
    fn radical_is_spanned_by_boundary_classes() {
        // a class pairs to zero with everything iff its A/B part vanishes
        let s = sig(2, 3);
        let basis = BasisIndex::all(&s);
        for mask in 0..(1u32 << s.b1()) {
            let bits: Vec<u8> = (0..s.b1()).map(|k| ((mask >> k) & 1) as u8).collect();
            let x = F2Class::from_bits(&s, bits).unwrap();
            let central = basis.iter().all(|&e| {
                let e = F2Class::basis(&s, e).unwrap();
                intersection_mod2(&s, &x, &e).unwrap() == 0
            });
            let ab_zero = x.bits[..2 * s.genus()].iter().all(|&b| b == 0);
            assert_eq!(central, ab_zero);
        }
    }
}
