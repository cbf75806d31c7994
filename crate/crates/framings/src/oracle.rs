//! Brute-force verifiers, independent of the closed-form classification.
//!
//! `enumerate_spin_orbits` closes every quadratic form under transvections in
//! every direction, with the orbit partition as ground truth for the orbit
//! decision and orbit-count formulas. `bfs_framing`/`bfs_rel` run breadth-
//! first closure of a framing under a generator catalog inside a coordinate
//! box, asserting that the orbit key is constant on everything visited.
//! States outside the box are frontier-pruned, not errors.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::framing::{Framing, Generator};
use crate::rel::{RelFraming, RelGenerator};
use crate::spin::{same_orbit, QuadForm};
use crate::surface::SurfaceSig;
use crate::Error;

/// Enumeration guard: `2^{2g+n}` forms times as many directions.
pub const MAX_ENUM_B1: usize = 16;

/// The full orbit partition of the quadratic forms on a small surface.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    pub sig: SurfaceSig,
    /// Blocks in ascending order of their smallest member; each block sorted.
    pub blocks: Vec<Vec<QuadForm>>,
}

impl OrbitPartition {
    /// Index of the block containing `w`.
    pub fn block_of(&self, w: &QuadForm) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(w).is_ok())
    }
}

/// Partition all `2^{2g+n}` quadratic forms into transvection-closure orbits.
///
/// Works on bitmask encodings of base vectors: bit `k` of a mask is the value
/// on basis element `k`. The closure uses only the definitional action (the
/// coboundary shift of a twist), never the orbit criteria it is meant to
/// check.
pub fn enumerate_spin_orbits(sig: &SurfaceSig) -> Result<OrbitPartition, Error> {
    let b1 = sig.b1();
    if b1 > MAX_ENUM_B1 {
        return Err(Error::SizeGuardExceeded {
            b1,
            max: MAX_ENUM_B1,
        });
    }
    let g = sig.genus();
    let universe: u64 = 1 << b1;

    // pairing partner mask: swap the A/B bit in each handle pair
    let pair_mask = |x: u64| -> u64 {
        let mut out = 0u64;
        for i in 0..g {
            out |= ((x >> (2 * i + 1)) & 1) << (2 * i);
            out |= ((x >> (2 * i)) & 1) << (2 * i + 1);
        }
        out
    };
    // w(a) for base mask `base`: linear part plus handle cross terms of `a`
    let eval = |base: u64, a: u64| -> u64 {
        let mut acc = (base & a).count_ones() as u64;
        for i in 0..g {
            acc += (a >> (2 * i)) & (a >> (2 * i + 1)) & 1;
        }
        acc & 1
    };
    // base mask of w . T_a: shift by (w(a)+1) (. a)
    let transvect = |base: u64, a: u64| -> u64 {
        if eval(base, a) == 1 {
            base
        } else {
            base ^ pair_mask(a)
        }
    };

    let mut assigned = vec![usize::MAX; universe as usize];
    let mut blocks_raw: Vec<Vec<u64>> = Vec::new();
    for seed in 0..universe {
        if assigned[seed as usize] != usize::MAX {
            continue;
        }
        let id = blocks_raw.len();
        let mut block = Vec::new();
        let mut queue = VecDeque::from([seed]);
        assigned[seed as usize] = id;
        while let Some(cur) = queue.pop_front() {
            block.push(cur);
            for a in 0..universe {
                let next = transvect(cur, a);
                if assigned[next as usize] == usize::MAX {
                    assigned[next as usize] = id;
                    queue.push_back(next);
                }
            }
        }
        block.sort_unstable();
        blocks_raw.push(block);
    }

    let to_form = |mask: u64| -> QuadForm {
        let base: Vec<u8> = (0..b1).map(|k| ((mask >> k) & 1) as u8).collect();
        QuadForm::new(*sig, base).expect("mask within b1 bits")
    };
    let mut blocks: Vec<Vec<QuadForm>> = blocks_raw
        .into_iter()
        .map(|b| {
            let mut forms: Vec<QuadForm> = b.into_iter().map(to_form).collect();
            forms.sort();
            forms
        })
        .collect();
    blocks.sort_by(|x, y| x[0].cmp(&y[0]));
    Ok(OrbitPartition { sig: *sig, blocks })
}

/// Per-coordinate closed bounds for BFS state spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordBox {
    pub lo: Vec<BigInt>,
    pub hi: Vec<BigInt>,
}

impl CoordBox {
    pub fn uniform(dim: usize, lo: i64, hi: i64) -> CoordBox {
        CoordBox {
            lo: vec![BigInt::from(lo); dim],
            hi: vec![BigInt::from(hi); dim],
        }
    }

    pub fn contains(&self, state: &[BigInt]) -> bool {
        state.len() == self.lo.len()
            && state
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }
}

/// Outcome of a bounded breadth-first closure.
#[derive(Debug, Clone)]
pub struct BfsReport {
    pub start: Vec<BigInt>,
    pub bounds: CoordBox,
    pub visited: usize,
    /// Nonempty means a visited state disagreed with the start's orbit key.
    pub violations: Vec<String>,
    /// Visited states that are their own canonical representative.
    pub reached_canonical: Vec<Vec<BigInt>>,
    /// Whether any neighbor was pruned for leaving the box.
    pub frontier_pruned: bool,
}

fn abs_state(f: &Framing) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(2 * f.sig().genus());
    for i in 0..f.sig().genus() {
        v.push(f.rot_a()[i].clone());
        v.push(f.rot_b()[i].clone());
    }
    v
}

fn abs_from_state(template: &Framing, state: &[BigInt]) -> Framing {
    let g = template.sig().genus();
    let rot_a: Vec<BigInt> = (0..g).map(|i| state[2 * i].clone()).collect();
    let rot_b: Vec<BigInt> = (0..g).map(|i| state[2 * i + 1].clone()).collect();
    Framing::new(*template.sig(), rot_a, rot_b, template.rot_d().to_vec())
        .expect("state dimension matches")
}

/// Breadth-first closure of an absolute framing under `gens` within `bounds`
/// (interior coordinates `a_1, b_1, ..., a_g, b_g`; boundary coordinates are
/// fixed by every generator). Visits are deduplicated in sorted order for
/// reproducible reports.
pub fn bfs_framing(start: &Framing, bounds: &CoordBox, gens: &[Generator]) -> BfsReport {
    let key = start.orbit_key();
    let start_state = abs_state(start);
    let mut report = BfsReport {
        start: start_state.clone(),
        bounds: bounds.clone(),
        visited: 0,
        violations: Vec::new(),
        reached_canonical: Vec::new(),
        frontier_pruned: false,
    };
    if !bounds.contains(&start_state) {
        report.frontier_pruned = true;
        return report;
    }
    // the canonical representative is a function of the orbit key, so the
    // start's canonical state identifies every self-canonical visit as long
    // as the key stays constant (violations are recorded either way)
    let canon_state = abs_state(&start.canonicalize().0);
    let mut seen = HashSet::from([start_state.clone()]);
    let mut queue = VecDeque::from([start_state]);
    while let Some(state) = queue.pop_front() {
        report.visited += 1;
        let f = abs_from_state(start, &state);
        if f.orbit_key() != key {
            report
                .violations
                .push(format!("orbit key changed at {:?}", state));
        }
        if canon_state == state {
            report.reached_canonical.push(state.clone());
        }
        for gen in gens {
            let next = match f.apply(gen) {
                Ok(next) => next,
                Err(_) => continue,
            };
            let next_state = abs_state(&next);
            if !bounds.contains(&next_state) {
                report.frontier_pruned = true;
                continue;
            }
            if seen.insert(next_state.clone()) {
                queue.push_back(next_state);
            }
        }
    }
    report
}

fn rel_state(f: &RelFraming) -> Vec<BigInt> {
    let g = f.sig().genus();
    let mut v = Vec::with_capacity(2 * g + f.sig().n());
    for i in 0..g {
        v.push(f.rot_a()[i].clone());
        v.push(f.rot_b()[i].clone());
    }
    v.extend(f.arc_ceil().iter().cloned());
    v
}

fn rel_from_state(template: &RelFraming, state: &[BigInt]) -> RelFraming {
    let g = template.sig().genus();
    let n = template.sig().n();
    let rot_a: Vec<BigInt> = (0..g).map(|i| state[2 * i].clone()).collect();
    let rot_b: Vec<BigInt> = (0..g).map(|i| state[2 * i + 1].clone()).collect();
    let arcs: Vec<BigInt> = (0..n).map(|j| state[2 * g + j].clone()).collect();
    RelFraming::new(template.boundary().clone(), rot_a, rot_b, arcs)
        .expect("state dimension matches")
}

/// Breadth-first closure of a relative framing (interior plus arc
/// coordinates). `max_visited` caps exploration; hitting the cap sets
/// `frontier_pruned`.
pub fn bfs_rel(
    start: &RelFraming,
    bounds: &CoordBox,
    gens: &[RelGenerator],
    max_visited: usize,
) -> BfsReport {
    let key = start.orbit_key().ok();
    let start_state = rel_state(start);
    let mut report = BfsReport {
        start: start_state.clone(),
        bounds: bounds.clone(),
        visited: 0,
        violations: Vec::new(),
        reached_canonical: Vec::new(),
        frontier_pruned: false,
    };
    if !bounds.contains(&start_state) {
        report.frontier_pruned = true;
        return report;
    }
    let canon_state = start.canonicalize().ok().map(|(canon, _)| rel_state(&canon));
    let mut seen = HashSet::from([start_state.clone()]);
    let mut queue = VecDeque::from([start_state]);
    while let Some(state) = queue.pop_front() {
        if report.visited >= max_visited {
            report.frontier_pruned = true;
            break;
        }
        report.visited += 1;
        let f = rel_from_state(start, &state);
        if f.orbit_key().ok() != key {
            report
                .violations
                .push(format!("orbit key changed at {:?}", state));
        }
        if canon_state.as_deref() == Some(&state[..]) {
            report.reached_canonical.push(state.clone());
        }
        for gen in gens {
            let next = match f.apply(gen) {
                Ok(next) => next,
                Err(_) => continue,
            };
            let next_state = rel_state(&next);
            if !bounds.contains(&next_state) {
                report.frontier_pruned = true;
                continue;
            }
            if seen.insert(next_state.clone()) {
                queue.push_back(next_state);
            }
        }
    }
    report
}

/// Decompose every in-box absolute framing state (for the fixed boundary
/// rotation numbers of `template`) into connected components under `gens`.
/// Only practical for low-dimensional boxes.
pub fn abs_components(
    template: &Framing,
    bounds: &CoordBox,
    gens: &[Generator],
) -> BTreeMap<Vec<BigInt>, usize> {
    let dim = 2 * template.sig().genus();
    let mut states = Vec::new();
    enumerate_box(&bounds.lo, &bounds.hi, dim, &mut states);
    let mut component: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    let mut next_id = 0usize;
    for s in &states {
        if component.contains_key(s) {
            continue;
        }
        let id = next_id;
        next_id += 1;
        component.insert(s.clone(), id);
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(state) = queue.pop_front() {
            let f = abs_from_state(template, &state);
            for gen in gens {
                let next = match f.apply(gen) {
                    Ok(next) => next,
                    Err(_) => continue,
                };
                let ns = abs_state(&next);
                if bounds.contains(&ns) && !component.contains_key(&ns) {
                    component.insert(ns.clone(), id);
                    queue.push_back(ns);
                }
            }
        }
    }
    component
}

/// As `abs_components`, for relative framings over a fixed boundary datum.
pub fn rel_components(
    template: &RelFraming,
    bounds: &CoordBox,
    gens: &[RelGenerator],
) -> BTreeMap<Vec<BigInt>, usize> {
    let dim = 2 * template.sig().genus() + template.sig().n();
    let mut states = Vec::new();
    enumerate_box(&bounds.lo, &bounds.hi, dim, &mut states);
    let mut component: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    let mut next_id = 0usize;
    for s in &states {
        if component.contains_key(s) {
            continue;
        }
        let id = next_id;
        next_id += 1;
        component.insert(s.clone(), id);
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(state) = queue.pop_front() {
            let f = rel_from_state(template, &state);
            for gen in gens {
                let next = match f.apply(gen) {
                    Ok(next) => next,
                    Err(_) => continue,
                };
                let ns = rel_state(&next);
                if bounds.contains(&ns) && !component.contains_key(&ns) {
                    component.insert(ns.clone(), id);
                    queue.push_back(ns);
                }
            }
        }
    }
    component
}

fn enumerate_box(lo: &[BigInt], hi: &[BigInt], dim: usize, out: &mut Vec<Vec<BigInt>>) {
    let mut cur = Vec::with_capacity(dim);
    fn rec(k: usize, dim: usize, lo: &[BigInt], hi: &[BigInt], cur: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
        if k == dim {
            out.push(cur.clone());
            return;
        }
        let mut v = lo[k].clone();
        while v <= hi[k] {
            cur.push(v.clone());
            rec(k + 1, dim, lo, hi, cur, out);
            cur.pop();
            v += 1;
        }
    }
    rec(0, dim, lo, hi, &mut cur, out);
}

/// Apply a seeded pseudorandom generator word to an absolute framing and
/// report any invariant that fails to be preserved along the way.
pub fn random_word_check(f: &Framing, length: usize, seed: u64) -> Vec<String> {
    let mut violations = Vec::new();
    let catalog = Generator::catalog(f.sig());
    if catalog.is_empty() {
        return violations;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nu0 = f.nu_profile();
    let at0 = f.a_tilde();
    let arf0 = f.arf().ok();
    let spin0 = f.spin();
    let mut cur = f.clone();
    for step in 0..length {
        let gen = *catalog.choose(&mut rng).expect("catalog nonempty");
        cur = match cur.apply(&gen) {
            Ok(next) => next,
            Err(e) => {
                violations.push(format!("step {step}: {gen:?} failed: {e}"));
                break;
            }
        };
        if cur.nu_profile() != nu0 {
            violations.push(format!("step {step}: boundary profile changed"));
        }
        if cur.a_tilde() != at0 {
            violations.push(format!("step {step}: a_tilde changed"));
        }
        if cur.arf().ok() != arf0 {
            violations.push(format!("step {step}: Arf changed"));
        }
    }
    match same_orbit(&spin0, &cur.spin()) {
        Ok(d) if d.is_equivalent() => {}
        _ => violations.push("spin orbit changed across the word".to_string()),
    }
    violations
}

/// Relative analogue of `random_word_check`: the generalized Arf invariant
/// and (for genus 1) the gcd invariant must survive the word.
pub fn random_word_check_rel(f: &RelFraming, length: usize, seed: u64) -> Vec<String> {
    let mut violations = Vec::new();
    let catalog = RelGenerator::catalog(f.sig());
    if catalog.is_empty() {
        return violations;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arf0 = f.gen_arf();
    let at0 = f.a_tilde().ok();
    let mut cur = f.clone();
    let mut applied = 0usize;
    let mut attempts = 0usize;
    while applied < length && attempts < 20 * length + 100 {
        attempts += 1;
        let gen = *catalog.choose(&mut rng).expect("catalog nonempty");
        // state-dependent preconditions: skip inapplicable picks
        let next = match cur.apply(&gen) {
            Ok(next) => next,
            Err(_) => continue,
        };
        cur = next;
        applied += 1;
        if cur.gen_arf() != arf0 {
            violations.push(format!("after {applied} moves: generalized Arf changed"));
        }
        if cur.a_tilde().ok() != at0 {
            violations.push(format!("after {applied} moves: a_tilde changed"));
        }
    }
    violations
}

/// Seeded random framing on `sig` with coordinates in `[-span, span]`.
pub fn random_framing(sig: &SurfaceSig, span: i64, rng: &mut ChaCha8Rng) -> Framing {
    let g = sig.genus();
    let rot_a = (0..g).map(|_| BigInt::from(rng.gen_range(-span..=span))).collect();
    let rot_b = (0..g).map(|_| BigInt::from(rng.gen_range(-span..=span))).collect();
    let rot_d = (0..sig.n())
        .map(|_| BigInt::from(rng.gen_range(-span..=span)))
        .collect();
    Framing::new(*sig, rot_a, rot_b, rot_d).expect("lengths match")
}
