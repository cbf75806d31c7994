//! Command-line front end: JSON in, JSON out.
//!
//! Exit codes: 0 success, 1 malformed input, 2 infeasible data,
//! 3 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use framings::framing::{equivalence_witness, realize};
use framings::json::{
    BoundaryDataDoc, FramingDoc, GeneratorDoc, JsonError, JsonInt, OrbitKeyDoc, QuadFormDoc,
    RelFramingDoc, RelGeneratorDoc, RelOrbitKeyDoc, SurfaceDoc,
};
use framings::oracle::enumerate_spin_orbits;
use framings::rel::invert_rel_word;
use framings::spin::{orbit_count, same_orbit, BoundaryFunctional, SpinOrbitDecision};
use framings::suites;
use framings::DEFAULT_SEED;

#[derive(Parser)]
#[command(name = "framings", version, about = "Classify mapping-class-group orbits of framings and spin structures on compact oriented surfaces with boundary")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Surface bookkeeping
    Surface {
        #[command(subcommand)]
        command: SurfaceCmd,
    },
    /// Absolute framings
    Framing {
        #[command(subcommand)]
        command: FramingCmd,
    },
    /// Spin structures (quadratic forms)
    Spin {
        #[command(subcommand)]
        command: SpinCmd,
    },
    /// Relative framings (fixed boundary framing)
    Rel {
        #[command(subcommand)]
        command: RelCmd,
    },
    /// Run the brute-force verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest first Betti number enumerated exhaustively
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Echo the signature with its homology rank and Euler characteristic
    Info {
        #[arg(short = 'g', long)]
        genus: usize,
        #[arg(short = 'b', long)]
        boundary: usize,
    },
}

#[derive(Subcommand)]
enum FramingCmd {
    /// Compute the orbit key and invariants of a framing
    Classify { file: PathBuf },
    /// Decide equivalence of two framings, with a witness word when available
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Canonical representative, with a witness word for genus at most 1
    Canon { file: PathBuf },
    /// Construct a framing with a requested orbit key
    Realize { file: PathBuf },
}

#[derive(Subcommand)]
enum SpinCmd {
    /// Boundary restriction and Arf data of a quadratic form
    Classify { file: PathBuf },
    /// Decide orbit equivalence of two quadratic forms
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Exhaustive orbit enumeration against the closed-form counts
    Orbits {
        #[arg(short = 'g', long)]
        genus: usize,
        #[arg(short = 'b', long)]
        boundary: usize,
    },
}

#[derive(Subcommand)]
enum RelCmd {
    /// Orbit key of a relative framing
    Classify { file: PathBuf },
    /// Canonical representative with a replayable word (genus 1)
    Canon { file: PathBuf },
    /// Decide equivalence of two relative framings over the same boundary
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Whether any framing extends the given boundary datum
    Exists { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Spin,
    Abs,
    Rel,
    All,
}

enum Failure {
    Malformed(String),
    Infeasible(String),
    /// Infeasibility already reported in the emitted JSON.
    InfeasibleQuiet,
    Verification,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Malformed(_) => 1,
            Failure::Infeasible(_) | Failure::InfeasibleQuiet => 2,
            Failure::Verification => 3,
        }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Malformed(m) => Failure::Malformed(m),
            // shape errors are malformed documents; the rest is domain data
            JsonError::Domain(
                d @ (framings::Error::LengthMismatch { .. } | framings::Error::NotABit),
            ) => Failure::Malformed(d.to_string()),
            JsonError::Domain(d) => Failure::Infeasible(d.to_string()),
        }
    }
}

impl From<framings::Error> for Failure {
    fn from(e: framings::Error) -> Self {
        Failure::Infeasible(e.to_string())
    }
}

fn read_doc<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Malformed(m) => {
                    emit(&json!({ "error": { "kind": "malformed_input", "message": m } }))
                }
                Failure::Infeasible(m) => {
                    emit(&json!({ "error": { "kind": "infeasible", "message": m } }))
                }
                Failure::InfeasibleQuiet | Failure::Verification => {}
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Surface { command } => surface_cmd(command),
        Command::Framing { command } => framing_cmd(command),
        Command::Spin { command } => spin_cmd(command),
        Command::Rel { command } => rel_cmd(command),
        Command::Verify {
            suite,
            seed,
            max_size,
        } => verify_cmd(suite, seed, max_size),
    }
}

fn surface_cmd(command: SurfaceCmd) -> Result<(), Failure> {
    match command {
        SurfaceCmd::Info { genus, boundary } => {
            let sig = SurfaceDoc { genus, boundary }.to_sig()?;
            emit(&json!({
                "surface": SurfaceDoc::from_sig(&sig),
                "b1": sig.b1(),
                "euler_characteristic": sig.euler_characteristic(),
            }));
            Ok(())
        }
    }
}

fn framing_cmd(command: FramingCmd) -> Result<(), Failure> {
    match command {
        FramingCmd::Classify { file } => {
            let f = read_doc::<FramingDoc>(&file)?.to_framing()?;
            let arf = f.arf().ok();
            emit(&json!({
                "framing": FramingDoc::from_framing(&f),
                "orbit_key": OrbitKeyDoc::from_key(&f.orbit_key()),
                "nu": f.nu_profile().nu.iter().cloned().map(JsonInt).collect::<Vec<_>>(),
                "a_tilde": f.a_tilde().map(JsonInt),
                "arf": arf,
            }));
            Ok(())
        }
        FramingCmd::Equiv { file1, file2 } => {
            let f1 = read_doc::<FramingDoc>(&file1)?.to_framing()?;
            let f2 = read_doc::<FramingDoc>(&file2)?.to_framing()?;
            let (equivalent, witness) = equivalence_witness(&f1, &f2)?;
            if let Some(word) = &witness {
                // re-verify before printing
                let replayed = f1.apply_word(word)?;
                if replayed != f2 {
                    return Err(Failure::Infeasible(
                        "internal error: witness word failed verification".into(),
                    ));
                }
            }
            emit(&json!({
                "equivalent": equivalent,
                "witness": witness.map(|w| GeneratorDoc::word_from(&w)),
            }));
            Ok(())
        }
        FramingCmd::Canon { file } => {
            let f = read_doc::<FramingDoc>(&file)?.to_framing()?;
            let (canon, word) = f.canonicalize();
            if let Some(word) = &word {
                if f.apply_word(word)? != canon {
                    return Err(Failure::Infeasible(
                        "internal error: canonical word failed verification".into(),
                    ));
                }
            }
            emit(&json!({
                "canonical": FramingDoc::from_framing(&canon),
                "orbit_key": OrbitKeyDoc::from_key(&canon.orbit_key()),
                "word": word.map(|w| GeneratorDoc::word_from(&w)),
            }));
            Ok(())
        }
        FramingCmd::Realize { file } => {
            #[derive(serde::Deserialize)]
            struct RealizeRequest {
                surface: SurfaceDoc,
                orbit_key: OrbitKeyDoc,
            }
            let req: RealizeRequest = read_doc(&file)?;
            let sig = req.surface.to_sig()?;
            let key = req.orbit_key.to_key();
            let f = realize(&sig, &key)?;
            if f.orbit_key() != key {
                return Err(Failure::Infeasible(
                    "internal error: realized framing reclassifies differently".into(),
                ));
            }
            emit(&json!({
                "framing": FramingDoc::from_framing(&f),
                "orbit_key": OrbitKeyDoc::from_key(&f.orbit_key()),
            }));
            Ok(())
        }
    }
}

fn spin_cmd(command: SpinCmd) -> Result<(), Failure> {
    match command {
        SpinCmd::Classify { file } => {
            let w = read_doc::<QuadFormDoc>(&file)?.to_form()?;
            let h = w.restrict_boundary();
            emit(&json!({
                "form": QuadFormDoc::from_form(&w),
                "boundary_restriction": h.values,
                "arf": w.arf().ok(),
                "orbits_with_this_restriction": orbit_count(w.sig(), &h)?,
            }));
            Ok(())
        }
        SpinCmd::Equiv { file1, file2 } => {
            let w1 = read_doc::<QuadFormDoc>(&file1)?.to_form()?;
            let w2 = read_doc::<QuadFormDoc>(&file2)?.to_form()?;
            match same_orbit(&w1, &w2)? {
                SpinOrbitDecision::Equivalent { witness } => {
                    if w1.transvect(&witness)? != w2 {
                        return Err(Failure::Infeasible(
                            "internal error: witness class failed verification".into(),
                        ));
                    }
                    emit(&json!({ "equivalent": true, "witness": witness.bits }));
                }
                SpinOrbitDecision::Inequivalent => {
                    emit(&json!({ "equivalent": false, "witness": null }));
                }
            }
            Ok(())
        }
        SpinCmd::Orbits { genus, boundary } => {
            let sig = SurfaceDoc { genus, boundary }.to_sig()?;
            let partition = enumerate_spin_orbits(&sig)?;
            let n1 = sig.boundary_count();
            let mut fibers = Vec::new();
            let mut agrees = true;
            for mask in 0u32..(1 << n1) {
                let bits: Vec<u8> = (0..n1).map(|k| ((mask >> k) & 1) as u8).collect();
                let h = BoundaryFunctional::new(&sig, bits.clone())?;
                let predicted = orbit_count(&sig, &h)?;
                let fiber: Vec<_> = partition
                    .blocks
                    .iter()
                    .filter(|b| b[0].restrict_boundary() == h)
                    .collect();
                agrees &= fiber.len() == predicted as usize;
                let arf_split = if h.is_zero() && sig.genus() >= 1 && fiber.len() == 2 {
                    let mut split = vec![0usize; 2];
                    for block in &fiber {
                        split[block[0].arf().unwrap() as usize] = block.len();
                    }
                    Some(split)
                } else {
                    None
                };
                fibers.push(json!({
                    "h": bits,
                    "predicted": predicted,
                    "enumerated": fiber.len(),
                    "block_sizes": fiber.iter().map(|b| b.len()).collect::<Vec<_>>(),
                    "arf_split": arf_split,
                }));
            }
            emit(&json!({
                "surface": SurfaceDoc::from_sig(&sig),
                "total_forms": 1u64 << sig.b1(),
                "total_orbits": partition.blocks.len(),
                "fibers": fibers,
                "agrees": agrees,
            }));
            if agrees {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn rel_cmd(command: RelCmd) -> Result<(), Failure> {
    match command {
        RelCmd::Classify { file } => {
            let f = read_doc::<RelFramingDoc>(&file)?.to_rel()?;
            let key = f.orbit_key()?;
            emit(&json!({
                "framing": RelFramingDoc::from_rel(&f),
                "orbit_key": RelOrbitKeyDoc::from_key(&key),
                "gen_arf": f.gen_arf(),
                "a_tilde": f.a_tilde().ok().map(JsonInt),
            }));
            Ok(())
        }
        RelCmd::Canon { file } => {
            let f = read_doc::<RelFramingDoc>(&file)?.to_rel()?;
            let (canon, word) = f.canonicalize()?;
            if f.apply_word(&word)? != canon {
                return Err(Failure::Infeasible(
                    "internal error: canonical word failed verification".into(),
                ));
            }
            emit(&json!({
                "canonical": RelFramingDoc::from_rel(&canon),
                "orbit_key": RelOrbitKeyDoc::from_key(&canon.orbit_key()?),
                "word": RelGeneratorDoc::word_from(&word),
            }));
            Ok(())
        }
        RelCmd::Equiv { file1, file2 } => {
            let f1 = read_doc::<RelFramingDoc>(&file1)?.to_rel()?;
            let f2 = read_doc::<RelFramingDoc>(&file2)?.to_rel()?;
            let equivalent = f1.same_orbit(&f2)?;
            let witness = if equivalent && f1.sig().genus() == 1 {
                let (c1, w1) = f1.canonicalize()?;
                let (c2, w2) = f2.canonicalize()?;
                debug_assert_eq!(c1, c2);
                let mut word = w1;
                word.extend(invert_rel_word(&w2));
                if f1.apply_word(&word)? != f2 {
                    return Err(Failure::Infeasible(
                        "internal error: witness word failed verification".into(),
                    ));
                }
                Some(word)
            } else {
                None
            };
            emit(&json!({
                "equivalent": equivalent,
                "witness": witness.map(|w| RelGeneratorDoc::word_from(&w)),
            }));
            Ok(())
        }
        RelCmd::Exists { file } => {
            let b = read_doc::<BoundaryDataDoc>(&file)?.to_boundary()?;
            let exists = framings::rel::exists_relative(&b);
            let expected = 2 - 2 * b.sig().genus() as i64;
            emit(&json!({
                "exists": exists,
                "expected_sum": expected,
                "profile_sum": JsonInt(b.nu().iter().sum()),
            }));
            if exists {
                Ok(())
            } else {
                Err(Failure::InfeasibleQuiet)
            }
        }
    }
}

fn verify_cmd(suite: Suite, seed: u64, max_size: usize) -> Result<(), Failure> {
    let reports = match suite {
        Suite::Spin => vec![suites::spin_suite(max_size)],
        Suite::Abs => vec![suites::abs_suite(seed)],
        Suite::Rel => vec![suites::rel_suite(seed)],
        Suite::All => suites::all_suites(seed, max_size),
    };
    let all_passed = reports.iter().all(|r| r.passed());
    emit(&serde_json::to_value(&reports).expect("serializable"));
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
