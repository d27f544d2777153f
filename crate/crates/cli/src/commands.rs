use std::path::Path;

use anyhow::{anyhow, bail, Context as _};
use monodromy_core::factorization::{
    hurwitz_equivalent, orbit_enumerate, BraidGroup, FreeGroup, McgGroup, SearchOptions, SymmetricGroup, Verdict,
    Witness,
};
use monodromy_core::lefschetz::{kas_equivalent, Base, FibrationSpec, LefschetzFibration};
use monodromy_core::mcg::{coxeter_element, verify_presentation_relators, ChainCurves, SymplecticClass};
use monodromy_core::vankampen::{
    abelianization, fingerprint, presentation, tietze_simplify, FingerprintConfig, MonodromyInput, MonodromySpec,
};
use monodromy_core::{Factorization, GroupContext, GroupPresentation, McgWord};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::files::{
    parse_factors, with_context, write_json, CertificateFile, ContextSpec, FactorizationFile, MoveRecord,
};
use crate::report::Report;
use crate::{Command, Format, SearchFlags, EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN};

pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn report(r: &Report, format: Format) -> Self {
        Outcome {
            output: match format {
                Format::Text => r.text(),
                Format::Json => r.json(),
            },
            code: if r.all_pass() { EXIT_OK } else { EXIT_FAIL },
        }
    }
}

pub fn dispatch(cmd: &Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Verify { file, replay, format } => verify(file, *replay, *format),
        Command::Equiv {
            first,
            second,
            search,
            kas,
            certificate,
            format,
        } => equiv(first, second, search, *kas, certificate.as_deref(), *format),
        Command::Orbit { file, search, format } => orbit(file, search, *format),
        Command::Vankampen {
            file,
            ks,
            regenerate,
            effort,
            format,
        } => vankampen(file, ks, *regenerate, *effort, *format),
        Command::Fibersum {
            first,
            second,
            psi,
            output,
            format,
        } => fibersum(first, second, psi, output.as_deref(), *format),
        Command::Coxeter { genus, chain, format } => coxeter(*genus, chain, *format),
        Command::Relators { genus, format } => relators(*genus, *format),
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Typed parse of JSON text, so errors carry line and column.
fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> anyhow::Result<T> {
    serde_json::from_str(text).with_context(|| format!("{}: invalid file", path.display()))
}

fn load<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    parse_json(path, &read_text(path)?)
}

fn load_fibration(path: &Path) -> anyhow::Result<LefschetzFibration> {
    let spec: FibrationSpec = load(path)?;
    LefschetzFibration::from_spec(&spec).with_context(|| format!("{}: invalid fibration", path.display()))
}

/// How a computed product is compared with a claimed one.
trait ProductCheck: GroupContext {
    fn product_checks(&self, actual: &Self::Element, expected: &Self::Element) -> Vec<(String, bool)> {
        vec![("expected_product".into(), self.equal(actual, expected))]
    }
}

impl ProductCheck for SymmetricGroup {}
impl ProductCheck for BraidGroup {}
impl ProductCheck for FreeGroup {}

impl ProductCheck for McgGroup {
    /// Word equality is not decided; compare the quotient images instead.
    fn product_checks(&self, actual: &McgWord, expected: &McgWord) -> Vec<(String, bool)> {
        vec![
            (
                "expected_product/symplectic".into(),
                actual.symplectic_rep(self.chain()) == expected.symplectic_rep(self.chain()),
            ),
            (
                "expected_product/puncture-permutation".into(),
                actual.puncture_permutation() == expected.puncture_permutation(),
            ),
        ]
    }
}

fn verify_factorization<C: ProductCheck>(ctx: C, file: &FactorizationFile) -> anyhow::Result<Report> {
    let f = parse_factors(&ctx, &file.factors)?;
    let mut r = Report::default();
    r.info("context", ctx.descriptor())
        .info("factors", f.len())
        .info("product", ctx.format(f.product()));
    if let Some(text) = &file.expected_product {
        let expected = ctx.parse(text).with_context(|| format!("expected_product `{text}`"))?;
        for (name, pass) in ctx.product_checks(f.product(), &expected) {
            r.check(name, pass);
        }
    }
    Ok(r)
}

fn replay_certificate<C: GroupContext>(ctx: C, cert: &CertificateFile) -> anyhow::Result<Report> {
    let source = parse_factors(&ctx, &cert.source).context("source")?;
    let target = parse_factors(&ctx, &cert.target).context("target")?;
    let moves = cert
        .moves
        .iter()
        .map(|m| m.to_move(&ctx))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut r = Report::default();
    r.info("context", ctx.descriptor()).info("moves", moves.len());
    match source.replay(&moves) {
        Ok(end) => {
            r.check("replay", end.same_factors(&target));
        }
        Err(e) => {
            r.info("replay error", e.to_string());
            r.check("replay", false);
        }
    }
    Ok(r)
}

fn verify(path: &Path, replay: bool, format: Format) -> anyhow::Result<Outcome> {
    let text = read_text(path)?;
    let report = if replay {
        let cert: CertificateFile = parse_json(path, &text)?;
        let spec: ContextSpec = cert.context.parse()?;
        with_context!(spec, |ctx| replay_certificate(ctx, &cert))?
    } else {
        let value: Value = parse_json(path, &text)?;
        if value.get("context").is_some() {
            let file: FactorizationFile = parse_json(path, &text)?;
            let spec: ContextSpec = file.context.parse()?;
            with_context!(spec, |ctx| verify_factorization(ctx, &file))?
        } else if value.get("genus").is_some() {
            let spec: FibrationSpec = parse_json(path, &text)?;
            let f = LefschetzFibration::from_spec(&spec)
                .with_context(|| format!("{}: invalid fibration", path.display()))?;
            let mut r = Report::default();
            r.info("genus", f.genus())
                .info("base", base_name(f.base()))
                .info("factors", f.factors().len())
                .info("symplectic type", f.is_symplectic_type());
            for c in f.validate().checks {
                r.check(c.representation, c.holds);
            }
            r
        } else if value.get("strands").is_some() {
            let spec: MonodromySpec = parse_json(path, &text)?;
            let m = MonodromyInput::from_spec(&spec)?;
            let mut r = Report::default();
            r.info("strands", m.strands())
                .info("factors", m.factors().len())
                .info("projective", m.is_projective());
            r
        } else {
            bail!("{}: not a factorization, fibration or monodromy file", path.display());
        }
    };
    Ok(Outcome::report(&report, format))
}

fn base_name(b: Base) -> &'static str {
    match b {
        Base::Disk => "disk",
        Base::Sphere => "sphere",
    }
}

/// Context-free summary of a verdict.
struct EquivResult {
    verdict: &'static str,
    explored: Option<usize>,
    moves: Vec<MoveRecord>,
    witness: Option<Witness>,
    certificate: Option<CertificateFile>,
}

fn summarize<C: GroupContext>(
    ctx: &C,
    a: &Factorization<C>,
    b: &Factorization<C>,
    v: Verdict<C::Element>,
) -> EquivResult {
    let label = v.label();
    match v {
        Verdict::Equivalent(c) => {
            let moves: Vec<MoveRecord> = c.moves.iter().map(|m| MoveRecord::from_move(ctx, m)).collect();
            EquivResult {
                verdict: label,
                explored: Some(c.explored),
                certificate: Some(CertificateFile {
                    context: ctx.descriptor(),
                    source: a.formatted_factors(),
                    target: b.formatted_factors(),
                    moves: moves.clone(),
                }),
                moves,
                witness: None,
            }
        }
        Verdict::Inequivalent(w) => EquivResult {
            verdict: label,
            explored: None,
            moves: Vec::new(),
            witness: Some(w),
            certificate: None,
        },
        Verdict::Unknown { explored } => EquivResult {
            verdict: label,
            explored: Some(explored),
            moves: Vec::new(),
            witness: None,
            certificate: None,
        },
    }
}

fn search_options<C: GroupContext>(ctx: &C, flags: &SearchFlags) -> anyhow::Result<SearchOptions<C::Element>> {
    let mut opts = SearchOptions::new(flags.budget as usize);
    if flags.conjugate || !flags.conjugators.is_empty() {
        let list = if flags.conjugators.is_empty() {
            None
        } else {
            Some(
                flags
                    .conjugators
                    .iter()
                    .map(|w| ctx.parse(w).with_context(|| format!("conjugator `{w}`")))
                    .collect::<anyhow::Result<Vec<_>>>()?,
            )
        };
        opts = opts.with_conjugation(list);
    }
    if flags.rotate {
        opts = opts.with_rotation();
    }
    Ok(opts)
}

fn equiv_in<C: GroupContext>(
    ctx: C,
    a: &FactorizationFile,
    b: &FactorizationFile,
    flags: &SearchFlags,
) -> anyhow::Result<EquivResult> {
    let fa = parse_factors(&ctx, &a.factors).context("first file")?;
    let fb = parse_factors(&ctx, &b.factors).context("second file")?;
    let opts = search_options(&ctx, flags)?;
    let v = hurwitz_equivalent(&fa, &fb, &opts)?;
    Ok(summarize(&ctx, &fa, &fb, v))
}

fn equiv(
    first: &Path,
    second: &Path,
    flags: &SearchFlags,
    kas: bool,
    certificate: Option<&Path>,
    format: Format,
) -> anyhow::Result<Outcome> {
    let result = if kas {
        let f1 = load_fibration(first)?;
        let f2 = load_fibration(second)?;
        let ctx = McgGroup::new(f1.genus());
        // without --conjugators the twists of the first fibration are used
        let opts = search_options(&ctx, flags)?;
        let v = kas_equivalent(&f1, &f2, &opts)?;
        summarize(&ctx, &f1.factorization(), &f2.factorization(), v)
    } else {
        let a: FactorizationFile = load(first)?;
        let b: FactorizationFile = load(second)?;
        let sa: ContextSpec = a.context.parse()?;
        let sb: ContextSpec = b.context.parse()?;
        if sa != sb {
            bail!("context mismatch: {sa} vs {sb}");
        }
        with_context!(sa, |ctx| equiv_in(ctx, &a, &b, flags))?
    };

    if let (Some(path), Some(cert)) = (certificate, &result.certificate) {
        write_json(path, cert)?;
    }
    let code = match result.verdict {
        "equivalent" => EXIT_OK,
        "inequivalent" => EXIT_FAIL,
        _ => EXIT_UNKNOWN,
    };
    let output = match format {
        Format::Text => {
            let mut s = format!("verdict: {}\n", result.verdict);
            if let Some(n) = result.explored {
                s.push_str(&format!("explored: {n}\n"));
            }
            if let Some(w) = &result.witness {
                s.push_str(&format!(
                    "witness: {}\n  first: {}\n  second: {}\n",
                    w.invariant, w.left, w.right
                ));
            }
            if result.certificate.is_some() {
                s.push_str(&format!("certificate: {} moves\n", result.moves.len()));
                for (i, m) in result.moves.iter().enumerate() {
                    s.push_str(&format!("  {}. {m}\n", i + 1));
                }
            }
            s
        }
        Format::Json => {
            let mut v = json!({ "verdict": result.verdict });
            if let Some(n) = result.explored {
                v["explored"] = json!(n);
            }
            if let Some(w) = &result.witness {
                v["witness"] = json!({ "invariant": w.invariant, "first": w.left, "second": w.right });
            }
            if result.certificate.is_some() {
                v["moves"] = serde_json::to_value(&result.moves)?;
            }
            let mut s = serde_json::to_string_pretty(&v)?;
            s.push('\n');
            s
        }
    };
    Ok(Outcome { output, code })
}

struct OrbitResult {
    exhausted: bool,
    explored: usize,
    members: Vec<Vec<String>>,
}

fn orbit_in<C: GroupContext>(ctx: C, file: &FactorizationFile, flags: &SearchFlags) -> anyhow::Result<OrbitResult> {
    let f = parse_factors(&ctx, &file.factors)?;
    let opts = search_options(&ctx, flags)?;
    let o = orbit_enumerate(&f, &opts)?;
    Ok(OrbitResult {
        exhausted: o.exhausted,
        explored: o.explored,
        members: o.members.iter().map(|m| m.formatted_factors()).collect(),
    })
}

fn orbit(path: &Path, flags: &SearchFlags, format: Format) -> anyhow::Result<Outcome> {
    let file: FactorizationFile = load(path)?;
    let spec: ContextSpec = file.context.parse()?;
    let o = with_context!(spec, |ctx| orbit_in(ctx, &file, flags))?;
    let output = match format {
        Format::Text => {
            let mut s = format!(
                "size: {}\nexhausted: {}\nexplored: {}\n",
                o.members.len(),
                o.exhausted,
                o.explored
            );
            for m in &o.members {
                s.push_str(&format!("[{}]\n", m.join(", ")));
            }
            s
        }
        Format::Json => {
            let v = json!({
                "size": o.members.len(),
                "exhausted": o.exhausted,
                "explored": o.explored,
                "members": o.members,
            });
            let mut s = serde_json::to_string_pretty(&v)?;
            s.push('\n');
            s
        }
    };
    Ok(Outcome { output, code: EXIT_OK })
}

fn presentation_json(p: &GroupPresentation) -> Value {
    json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

fn vankampen(path: &Path, ks: &[usize], regenerate: bool, effort: usize, format: Format) -> anyhow::Result<Outcome> {
    let spec: MonodromySpec = load(path)?;
    let input = if regenerate {
        let cusps = spec
            .cuspidal
            .as_ref()
            .ok_or_else(|| anyhow!("--regenerate needs a `cuspidal` input"))?;
        let c = monodromy_core::factorization::CuspidalFactorization::from_specs(spec.strands, cusps)?;
        MonodromyInput::from_factorization(&c.regenerate(), spec.projective)
    } else {
        MonodromyInput::from_spec(&spec)?
    };
    let p = presentation(&input)?;
    let config = FingerprintConfig {
        degrees: ks.to_vec(),
        simplify_effort: effort,
    };
    let fp = fingerprint(&p, &config)?;
    let simple = tietze_simplify(&p, effort);
    debug_assert_eq!(abelianization(&simple), fp.abelianization);
    let output = match format {
        Format::Text => {
            let mut s = String::from("presentation:\n");
            s.push_str(&p.to_text());
            s.push_str("simplified:\n");
            s.push_str(&simple.to_text());
            s.push_str("fingerprint: ");
            s.push_str(&serde_json::to_string(&fp)?);
            s.push('\n');
            s
        }
        Format::Json => {
            let v = json!({
                "presentation": presentation_json(&p),
                "simplified": presentation_json(&simple),
                "fingerprint": fp,
            });
            let mut s = serde_json::to_string_pretty(&v)?;
            s.push('\n');
            s
        }
    };
    Ok(Outcome { output, code: EXIT_OK })
}

fn fibersum(first: &Path, second: &Path, psi: &str, output: Option<&Path>, format: Format) -> anyhow::Result<Outcome> {
    let f1 = load_fibration(first)?;
    let f2 = load_fibration(second)?;
    let psi = if psi.trim().is_empty() {
        McgWord::identity(f1.genus())
    } else {
        McgWord::parse_body(f1.genus(), psi).with_context(|| format!("--psi `{psi}`"))?
    };
    let sum = f1.fiber_sum(&f2, &psi)?;
    let spec = sum.to_spec();

    // the written file must load back to the same fibration
    let text = serde_json::to_string_pretty(&spec)? + "\n";
    let reread: FibrationSpec = serde_json::from_str(&text)?;
    let reloaded = LefschetzFibration::from_spec(&reread)?;

    let chain = ChainCurves::standard(sum.genus());
    let image = |w: &McgWord| w.symplectic_rep(&chain);
    let expected = match sum.base() {
        Base::Disk => &(&(&image(f1.phi()) * &image(&psi.invert())) * &image(f2.phi())) * &image(&psi),
        Base::Sphere => image(&McgWord::identity(sum.genus())),
    };
    let mut r = Report::default();
    r.info("genus", sum.genus())
        .info("base", base_name(sum.base()))
        .info("factors", sum.factors().len())
        .info("phi", sum.phi().body_string());
    r.check("roundtrip", reloaded == sum);
    for c in reloaded.validate().checks {
        r.check(c.representation, c.holds);
    }
    r.check("product-contract", image(sum.factorization().product()) == expected);

    let code = if r.all_pass() { EXIT_OK } else { EXIT_FAIL };
    let output = match output {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            Outcome::report(&r, format).output
        }
        // without --output the fibration itself is printed; checks set the exit code
        None => text,
    };
    Ok(Outcome { output, code })
}

fn coxeter(genus: usize, chain: &[u32], format: Format) -> anyhow::Result<Outcome> {
    let w = coxeter_element(genus, chain)?;
    let curves = ChainCurves::standard(genus);
    let m = w.symplectic_rep(&curves);
    let image = if m.is_identity() {
        "identity"
    } else if m.neg().is_identity() {
        "minus-identity"
    } else {
        "other"
    };
    let class = SymplecticClass::of(&m, &curves);
    let mut r = Report::default();
    r.info("word", w.to_string())
        .info("length", w.len())
        .info("symplectic image", image)
        .info("symplectic class", class.to_string())
        .info("puncture permutation", w.puncture_permutation().to_string());
    Ok(Outcome::report(&r, format))
}

fn relators(genus: usize, format: Format) -> anyhow::Result<Outcome> {
    let report = verify_presentation_relators(genus)?;
    let mut r = Report::default();
    r.info("genus", genus);
    for c in &report.checks {
        r.check(
            format!(
                "{:?} {:?} {:?}: {}",
                c.presentation, c.representation, c.expected, c.relator
            ),
            c.holds,
        );
    }
    Ok(Outcome::report(&r, format))
}
