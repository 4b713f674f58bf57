//! Command-line front end: presentation emission, hom search, certification,
//! the catalog table, and a self-check suite. JSON is the canonical output;
//! text is a lossy rendering of the same structure. Exit codes: 0 for a
//! conclusive run, 1 for a verification failure or inconclusive certificate,
//! 2 for input or resource errors.

use crate::affine::{symbolic_eval, AffineElement, AffineMaps};
use crate::certify::{
    a5_nonsurjection_table, artifact_tag, certify_qdim2, certify_qdim3, Conclusion,
    GeneratorImage, PresentationReport, QDim2Certificate, QDim3Certificate, TableReport,
};
use crate::error::{Error, Result};
use crate::golden::GoldenNum;
use crate::group::{CyclicGroup, FiniteGroup};
use crate::homs::{enumerate_homs, family_images, GroupHom, SearchOptions};
use crate::icosian::IcosianGroup;
use crate::perm::{cycle_notation, PermGroup};
use crate::quaternion::Quaternion;
use crate::twobridge::{family_filling, TwoBridgeKnot};
use crate::words::{eval_word, Presentation, Word};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "qdim",
    version,
    about = "Exact certificates for quotient-dimension computations on two-bridge knot surgeries"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a two-bridge knot group presentation, optionally 1/n filled
    Present {
        /// Knot as p/q, e.g. 27/13
        spec: Option<String>,
        /// Surgery denominator n of the 1/n filling
        #[arg(long)]
        surgery: Option<i64>,
        /// Family index N, selecting K(40N+27, 20N+13)
        #[arg(long, value_name = "N")]
        family: Option<u64>,
        /// Family parameter k, fixing the surgery n = (10k-1)/7
        #[arg(long)]
        k: Option<u64>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Enumerate homomorphisms onto a finite target group
    Homs {
        /// Knot as p/q
        spec: Option<String>,
        /// Source presentation as "gens: x, y ; rels: <word> , <word>"
        #[arg(long, value_name = "TEXT", conflicts_with_all = ["spec", "surgery"])]
        presentation: Option<String>,
        /// Surgery denominator n of the 1/n filling
        #[arg(long)]
        surgery: Option<i64>,
        /// Target group: a5, 2i, or c:<d>
        #[arg(long)]
        target: String,
        /// Keep only surjections
        #[arg(long)]
        surjective: bool,
        /// Also run the full enumeration over all image pairs
        #[arg(long)]
        exact_count: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Assemble a quotient-dimension certificate (dimension 2 or 3)
    Certify {
        /// Which conclusion to certify: 2 (family member) or 3 (criterion)
        dim: u8,
        /// Knot as p/q (dimension 3 only)
        spec: Option<String>,
        /// Family index N (dimension 2 only)
        #[arg(long, value_name = "N")]
        family: Option<u64>,
        /// Family parameter k (dimension 2 only)
        #[arg(long)]
        k: Option<u64>,
        /// Write the JSON certificate to this file
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Worker threads for the embedded hom search
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the A5 nonsurjection scan over the built-in knot catalog
    Table {
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Verify the built-in invariants and identities
    Selfcheck,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CertificateIntegrity(_)
        | Error::InternalConsistency(_)
        | Error::LiftPrecondition { .. }
        | Error::NotATranslation(_) => 1,
        _ => 2,
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Present {
            spec,
            surgery,
            family,
            k,
            json,
        } => cmd_present(spec, surgery, family, k, json),
        Command::Homs {
            spec,
            presentation,
            surgery,
            target,
            surjective,
            exact_count,
            jobs,
            json,
        } => cmd_homs(
            spec.as_deref(),
            presentation.as_deref(),
            surgery,
            &target,
            surjective,
            exact_count,
            jobs,
            json,
        ),
        Command::Certify {
            dim,
            spec,
            family,
            k,
            json,
            jobs,
        } => cmd_certify(dim, spec, family, k, json, jobs),
        Command::Table { jobs, json } => cmd_table(jobs, json),
        Command::Selfcheck => cmd_selfcheck(),
    }
}

pub fn parse_knot_spec(s: &str) -> Result<(u64, u64)> {
    let (p_text, q_text) = s
        .split_once('/')
        .ok_or_else(|| Error::InvalidInput(format!("knot spec must be p/q, got '{}'", s)))?;
    let p = p_text
        .trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidInput(format!("invalid p in knot spec '{}'", s)))?;
    let q = q_text
        .trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidInput(format!("invalid q in knot spec '{}'", s)))?;
    Ok((p, q))
}

fn family_args(family: Option<u64>, k: Option<u64>) -> Result<Option<(u64, u64)>> {
    match (family, k) {
        (Some(n), Some(k)) => Ok(Some((n, k))),
        (None, None) => Ok(None),
        _ => Err(Error::InvalidInput(
            "--family and --k must be given together".to_string(),
        )),
    }
}

#[derive(Serialize)]
struct FamilyParams {
    #[serde(rename = "N")]
    n_family: u64,
    k: u64,
}

#[derive(Serialize)]
struct PresentOutput {
    p: u64,
    q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<FamilyParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    surgery: Option<i64>,
    sigma: i64,
    epsilon: String,
    generators: Vec<String>,
    meridian: String,
    longitude: String,
    relators: Vec<String>,
}

fn cmd_present(
    spec: Option<String>,
    surgery: Option<i64>,
    family: Option<u64>,
    k: Option<u64>,
    json: bool,
) -> Result<i32> {
    let (knot, surgery, fam) = match (spec, family_args(family, k)?) {
        (Some(s), None) => {
            let (p, q) = parse_knot_spec(&s)?;
            (TwoBridgeKnot::new(p, q)?, surgery, None)
        }
        (None, Some((n_family, k))) => {
            if surgery.is_some() {
                return Err(Error::InvalidInput(
                    "--surgery conflicts with --family; the family fixes n = (10k-1)/7"
                        .to_string(),
                ));
            }
            let fam = family_filling(n_family, k)?;
            (fam.knot, Some(fam.surgery), Some(FamilyParams { n_family, k }))
        }
        (Some(_), Some(_)) => {
            return Err(Error::InvalidInput(
                "give either a p/q spec or --family/--k, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "missing knot: give a p/q spec or --family/--k".to_string(),
            ))
        }
    };
    let pres = match surgery {
        Some(n) => knot.filled(n)?,
        None => knot.presentation.clone(),
    };
    let gens = pres.gens();
    let out = PresentOutput {
        p: knot.data.p,
        q: knot.data.q,
        family: fam,
        surgery,
        sigma: knot.data.sigma,
        epsilon: knot
            .data
            .e
            .iter()
            .map(|&v| if v > 0 { '+' } else { '-' })
            .collect(),
        generators: gens.to_vec(),
        meridian: knot.data.meridian.render(gens),
        longitude: knot.data.longitude.render(gens),
        relators: pres.relators().iter().map(|r| r.render(gens)).collect(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        match &out.family {
            Some(f) => println!("K({}, {})  [family N={}, k={}]", out.p, out.q, f.n_family, f.k),
            None => println!("K({}, {})", out.p, out.q),
        }
        println!("sigma: {}", out.sigma);
        println!("epsilon: {}", out.epsilon);
        println!("generators: {}", out.generators.join(", "));
        println!("meridian: {}", out.meridian);
        println!("longitude: {}", out.longitude);
        for (i, r) in out.relators.iter().enumerate() {
            if i == 1 {
                let n = out.surgery.unwrap_or(0);
                println!("relator r2 (surgery 1/{}): {}", n, r);
            } else {
                println!("relator r{}: {}", i + 1, r);
            }
        }
    }
    Ok(0)
}

enum TargetGroup {
    A5(PermGroup),
    TwoI(IcosianGroup),
    Cyclic(CyclicGroup),
}

impl TargetGroup {
    fn parse(s: &str) -> Result<TargetGroup> {
        let lower = s.to_ascii_lowercase();
        if lower == "a5" {
            return Ok(TargetGroup::A5(PermGroup::alternating_5()?));
        }
        if lower == "2i" {
            return Ok(TargetGroup::TwoI(IcosianGroup::generate()?));
        }
        if let Some(d) = lower.strip_prefix("c:") {
            let d = d
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("invalid cyclic order in '{}'", s)))?;
            return Ok(TargetGroup::Cyclic(CyclicGroup::new(d)?));
        }
        Err(Error::InvalidInput(format!(
            "unknown target '{}'; expected a5, 2i, or c:<d>",
            s
        )))
    }

    fn name(&self) -> String {
        match self {
            TargetGroup::A5(_) => "A5".to_string(),
            TargetGroup::TwoI(_) => "2I".to_string(),
            TargetGroup::Cyclic(g) => format!("C{}", g.order()),
        }
    }

    fn group(&self) -> &dyn FiniteGroup {
        match self {
            TargetGroup::A5(g) => g,
            TargetGroup::TwoI(g) => g,
            TargetGroup::Cyclic(g) => g,
        }
    }

    fn display(&self, idx: usize) -> String {
        match self {
            TargetGroup::A5(g) => cycle_notation(g.element(idx)),
            TargetGroup::TwoI(g) => g.element(idx).to_string(),
            TargetGroup::Cyclic(_) => idx.to_string(),
        }
    }
}

#[derive(Serialize)]
struct HomEntry {
    images: Vec<GeneratorImage>,
}

#[derive(Serialize)]
struct HomsOutput {
    artifact: String,
    target: String,
    target_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    surgery: Option<i64>,
    presentation: PresentationReport,
    surjective_only: bool,
    candidates: u64,
    reduced_found: u64,
    weighted_total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_total: Option<u64>,
    homs: Vec<HomEntry>,
    timing_ms: u128,
}

fn hom_entries(homs: &[GroupHom], pres: &Presentation, target: &TargetGroup) -> Vec<HomEntry> {
    homs.iter()
        .map(|h| HomEntry {
            images: h
                .images
                .iter()
                .zip(pres.gens())
                .map(|(&idx, name)| GeneratorImage {
                    generator: name.clone(),
                    index: idx,
                    element: target.display(idx),
                })
                .collect(),
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_homs(
    spec: Option<&str>,
    presentation: Option<&str>,
    surgery: Option<i64>,
    target: &str,
    surjective: bool,
    exact_count: bool,
    jobs: usize,
    json: bool,
) -> Result<i32> {
    let start = std::time::Instant::now();
    let (pres, knot_params) = match (spec, presentation) {
        (Some(spec), None) => {
            let (p, q) = parse_knot_spec(spec)?;
            let knot = TwoBridgeKnot::new(p, q)?;
            let pres = match surgery {
                Some(n) => knot.filled(n)?,
                None => knot.presentation.clone(),
            };
            (pres, Some((p, q)))
        }
        (None, Some(text)) => (Presentation::parse(text)?, None),
        _ => {
            return Err(Error::InvalidInput(
                "give exactly one source: a p/q spec or --presentation".to_string(),
            ))
        }
    };
    let target = TargetGroup::parse(target)?;
    let opts = SearchOptions {
        surjective_only: surjective,
        exact: false,
        jobs,
        ..SearchOptions::default()
    };
    let reduced = enumerate_homs(&pres, target.group(), &target.name(), &opts)?;
    let exact = if exact_count {
        let exact_opts = SearchOptions {
            exact: true,
            ..opts
        };
        Some(enumerate_homs(&pres, target.group(), &target.name(), &exact_opts)?)
    } else {
        None
    };
    let shown = exact.as_ref().map(|e| &e.homs).unwrap_or(&reduced.homs);
    let out = HomsOutput {
        artifact: artifact_tag(),
        target: target.name(),
        target_order: target.group().order(),
        p: knot_params.map(|(p, _)| p),
        q: knot_params.map(|(_, q)| q),
        surgery,
        presentation: PresentationReport::new(&pres),
        surjective_only: surjective,
        candidates: reduced.candidates,
        reduced_found: reduced.found_count,
        weighted_total: reduced.total_count,
        exact_total: exact.as_ref().map(|e| e.total_count),
        homs: hom_entries(shown, &pres, &target),
        timing_ms: start.elapsed().as_millis(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("target: {} (order {})", out.target, out.target_order);
        println!("candidates scanned: {}", out.candidates);
        println!(
            "{} found (reduced scan): {}",
            if surjective { "surjections" } else { "homs" },
            out.reduced_found
        );
        println!("total with class weights: {}", out.weighted_total);
        if let Some(exact_total) = out.exact_total {
            println!("total (exact enumeration): {}", exact_total);
        }
        let cap = 24;
        for (i, h) in out.homs.iter().take(cap).enumerate() {
            let rendered: Vec<String> = h
                .images
                .iter()
                .map(|gi| format!("{} -> {}", gi.generator, gi.element))
                .collect();
            println!("hom {}: {}", i + 1, rendered.join(", "));
        }
        if out.homs.len() > cap {
            println!("... ({} more)", out.homs.len() - cap);
        }
        println!("time: {} ms", out.timing_ms);
    }
    Ok(0)
}

fn write_certificate<T: Serialize>(path: &PathBuf, cert: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(cert)?;
    text.push('\n');
    std::fs::write(path, text)?;
    println!("certificate written to {}", path.display());
    Ok(())
}

fn print_qdim2_summary(cert: &QDim2Certificate) {
    println!("conclusion: {}", cert.conclusion);
    println!(
        "family member: N={} k={} -> K({}, {}), surgery 1/{}",
        cert.family.n_family, cert.family.k, cert.family.p, cert.family.q, cert.family.surgery
    );
    if cert.homology_invariant_factors.is_empty() {
        println!("first homology: trivial (homology sphere)");
    } else {
        println!(
            "first homology invariant factors: [{}]",
            cert.homology_invariant_factors.join(", ")
        );
    }
    if let Some(hom) = &cert.hom {
        println!(
            "hom onto {}: verified={}, surjective={}",
            hom.target, hom.verified, hom.surjective
        );
        for gi in &hom.images {
            println!("  {} -> {}", gi.generator, gi.element);
        }
    }
    for (i, lift) in cert.relator_lifts.iter().enumerate() {
        println!(
            "relator r{} lift ({} letters): coefficients vanish = {}",
            i + 1,
            lift.relator.split_whitespace().count(),
            lift.vanishes
        );
    }
    if let Some(comm) = &cert.commutator {
        println!(
            "commutator {}: nonzero translation = {}",
            comm.word, comm.is_nonzero_translation
        );
        println!("  coeff_u = {}", comm.coeff_u);
        println!("  coeff_v = {}", comm.coeff_v);
    }
    if let Some(stage) = &cert.failed_stage {
        println!("failed stage: {}", stage);
    }
    for hyp in &cert.unchecked_hypotheses {
        println!("unchecked hypothesis: {}", hyp);
    }
    println!("time: {} ms", cert.timing_ms);
}

fn print_qdim3_summary(cert: &QDim3Certificate) {
    println!("conclusion: {}", cert.conclusion);
    let names = if cert.knot.names.is_empty() {
        String::new()
    } else {
        format!("  [{}]", cert.knot.names.join(", "))
    };
    println!("knot: K({}, {}){}", cert.knot.p, cert.knot.q, names);
    println!(
        "knot group homology invariant factors: [{}]",
        cert.homology_invariant_factors.join(", ")
    );
    println!(
        "sample filling 1/{}: homology {}",
        cert.sample_filling_surgery,
        if cert.sample_filling_invariant_factors.is_empty() {
            "trivial".to_string()
        } else {
            format!("[{}]", cert.sample_filling_invariant_factors.join(", "))
        }
    );
    println!(
        "A5 surjections: {} (candidates {}, reduced hits {})",
        cert.a5_search.surjections_total, cert.a5_search.candidates, cert.a5_search.surjections_found
    );
    if let Some(witness) = &cert.witness {
        println!("witness surjection:");
        for gi in &witness.images {
            println!("  {} -> {}", gi.generator, gi.element);
        }
    }
    for hyp in &cert.unchecked_hypotheses {
        println!("unchecked hypothesis: {}", hyp);
    }
    println!("time: {} ms", cert.timing_ms);
}

fn cmd_certify(
    dim: u8,
    spec: Option<String>,
    family: Option<u64>,
    k: Option<u64>,
    json: Option<PathBuf>,
    jobs: usize,
) -> Result<i32> {
    match dim {
        2 => {
            let (n_family, k) = family_args(family, k)?.ok_or_else(|| {
                Error::InvalidInput("certify 2 needs --family N --k k".to_string())
            })?;
            if spec.is_some() {
                return Err(Error::InvalidInput(
                    "certify 2 takes --family/--k, not a p/q spec".to_string(),
                ));
            }
            let ico = IcosianGroup::generate()?;
            let cert = certify_qdim2(n_family, k, &ico)?;
            print_qdim2_summary(&cert);
            if let Some(path) = &json {
                write_certificate(path, &cert)?;
            }
            Ok(if cert.conclusion == Conclusion::QDim2 { 0 } else { 1 })
        }
        3 => {
            if family.is_some() || k.is_some() {
                return Err(Error::InvalidInput(
                    "certify 3 takes a p/q spec, not --family/--k".to_string(),
                ));
            }
            let spec = spec.ok_or_else(|| {
                Error::InvalidInput("certify 3 needs a knot spec p/q".to_string())
            })?;
            let (p, q) = parse_knot_spec(&spec)?;
            let cert = certify_qdim3(p, q, jobs)?;
            print_qdim3_summary(&cert);
            if let Some(path) = &json {
                write_certificate(path, &cert)?;
            }
            Ok(if cert.conclusion == Conclusion::QDim3Criterion {
                0
            } else {
                1
            })
        }
        d => Err(Error::InvalidInput(format!(
            "unsupported dimension {}; expected 2 or 3",
            d
        ))),
    }
}

fn print_table_summary(report: &TableReport) {
    for row in &report.rows {
        let label = if row.control {
            format!("{} (control)", row.name)
        } else {
            row.name.clone()
        };
        println!(
            "{}  {:<14} K({}, {}): {} A5 surjections",
            if row.pass { "PASS" } else { "FAIL" },
            label,
            row.p,
            row.q,
            row.surjections_total
        );
    }
    let catalog = report.rows.iter().filter(|r| !r.control).count();
    println!(
        "{} catalog rows + control: {}  ({} ms)",
        catalog,
        if report.all_pass { "PASS" } else { "FAIL" },
        report.timing_ms
    );
}

fn cmd_table(jobs: usize, json: bool) -> Result<i32> {
    let report = a5_nonsurjection_table(jobs)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_table_summary(&report);
    }
    Ok(if report.all_pass { 0 } else { 1 })
}

fn golden(a: i64, b: i64) -> GoldenNum {
    GoldenNum::from_parts(a, b, 1)
}

fn quat(w: (i64, i64), x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Quaternion {
    Quaternion::new(golden(w.0, w.1), golden(x.0, x.1), golden(y.0, y.1), golden(z.0, z.1))
}

fn specialization_spotcheck() -> Result<bool> {
    let (fx, fy) = family_images();
    let x = Word::generator(2, 0);
    let y = Word::generator(2, 1);
    let words = vec![
        Word::gen_pow(2, 0, 5),
        Word::commutator(&x, &y)?,
        Word::commutator(&Word::gen_pow(2, 0, 5), &y)?,
        family_filling(0, 5)?.knot.data.w,
        family_filling(0, 5)?.knot.data.longitude,
    ];
    let pairs = vec![
        (Quaternion::basis_i(), Quaternion::basis_j()),
        (
            quat((1, 0), (0, 1), (0, 0), (0, 0)),
            quat((0, 0), (0, 0), (1, -1), (1, 0)),
        ),
    ];
    for w in &words {
        let sym = symbolic_eval(w, &fx, &fy)?;
        for (u, v) in &pairs {
            let direct = sym.specialize(u, v);
            let images = vec![
                AffineElement::new(u.clone(), fx.clone()),
                AffineElement::new(v.clone(), fy.clone()),
            ];
            let concrete = eval_word(w, &images, &AffineMaps)?;
            if direct != concrete {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cmd_selfcheck() -> Result<i32> {
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("{}  {}", if ok { "ok  " } else { "FAIL" }, name);
        if !ok {
            failures += 1;
        }
    };

    let ico = IcosianGroup::generate()?;
    check("binary icosahedral group has order 120", ico.order() == 120);
    check(
        "multiplication table satisfies the group axioms",
        crate::group::check_axioms(&ico).is_ok(),
    );
    let center = crate::group::center(&ico);
    check(
        "center is {1, -1}",
        center.len() == 2 && center.contains(&ico.identity()) && center.contains(&ico.neg_one_index()),
    );
    let quotient = ico.central_quotient()?;
    check(
        "central quotient has order 60, nonabelian, simple",
        quotient.group.order() == 60
            && !crate::group::is_abelian(&quotient.group)
            && crate::group::is_simple(&quotient.group),
    );
    let a5 = PermGroup::alternating_5()?;
    check(
        "alternating group A5 has order 60 and is simple",
        a5.order() == 60 && crate::group::is_simple(&a5),
    );
    check(
        "s and t generate all of 2I",
        crate::group::generates(&ico, &[ico.s_index(), ico.t_index()])?,
    );

    let (fx, fy) = family_images();
    let mut geometric_sum = Quaternion::zero();
    let mut power = Quaternion::one();
    for _ in 0..5 {
        geometric_sum = &geometric_sum + &power;
        power = &power * &fx;
    }
    check(
        "1 - t^2 + t^4 - t^6 + t^8 = 1 + (phi-2) i + (1-phi) j",
        geometric_sum == quat((1, 0), (-2, 1), (1, -1), (0, 0)),
    );
    let product = &geometric_sum * &(&Quaternion::one() - &fy);
    check(
        "(1 - t^2 + t^4 - t^6 + t^8)(1 - s^2 t^2 s) = phi + (1-phi) j + k",
        product == quat((0, 1), (0, 0), (1, -1), (1, 0)),
    );
    check(
        "affine specialization matches concrete evaluation",
        specialization_spotcheck()?,
    );
    check(
        "family member (0, 5) certifies qdim=2",
        certify_qdim2(0, 5, &ico)?.conclusion == Conclusion::QDim2,
    );

    if failures == 0 {
        println!("selfcheck: all checks passed  [{}]", artifact_tag());
        Ok(0)
    } else {
        println!("selfcheck: {} check(s) FAILED", failures);
        Ok(1)
    }
}
