//! `hodge` — exact Hodge-theory workbench CLI.
//!
//! Each subcommand runs the corresponding exact checks and reports JSON (or
//! text). Exit status: 0 when every asserted identity passes, 1 when some
//! identity fails (the violated relation is named in the report and on
//! stderr), 2 on parse/usage errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hodge_core::jsonio;
use hodge_core::kahler::OpLabel;
use hodge_core::ring::{ring_builtin, BuiltinRing, GradedRing, RingElement};
use hodge_core::scalar::{GaussRational, Rational};
use hodge_core::{
    exterior, fourier, kahler, lefschetz, ExteriorElement, IntersectionMatrix, MetricSpec,
    MultiIndex, OrientationSpec,
};

#[derive(Parser)]
#[command(name = "hodge", version, about = "exact workbench for linear and Kähler Hodge theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Star-operator tables: ⋆e_I for every multi-index, the volume element,
    /// and exact verification of the involution and defining identity.
    Star {
        /// Real dimension (Euclidean metric unless --metric is given)
        #[arg(long)]
        m: Option<usize>,
        /// Metric JSON (inline or @file): {"dim":…,"gram":[[…]]}
        #[arg(long)]
        metric: Option<String>,
        /// Use the reversed orientation
        #[arg(long)]
        reversed: bool,
    },
    /// Run the full Kähler commutation-relation suite over all modes
    /// |k|∞ ≤ max-mode, every residual exact.
    KahlerCheck {
        /// Complex dimension (1..=3 recommended)
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_mode: i64,
    },
    /// Flat-torus Hodge theory: Betti numbers, Poincaré pairings, Laplacian
    /// eigenvalues and the exact Hodge decomposition of a form.
    Torus {
        /// Real dimension
        #[arg(long)]
        m: usize,
        /// Frequency bound for the Laplacian eigenvalue sweep
        #[arg(long, default_value_t = 2)]
        max_mode: i64,
        /// Fourier form JSON (inline or @file) to decompose; a deterministic
        /// sample form is used when omitted
        #[arg(long)]
        form: Option<String>,
    },
    /// Hard Lefschetz and the primitive decomposition on a ring.
    Lefschetz {
        #[arg(long)]
        ring: String,
        /// Dimension parameter for the `pn`/`torus` builtin aliases
        #[arg(long)]
        n: Option<usize>,
        /// Lefschetz class: a basis name, inline JSON coefficients, or the
        /// ring's distinguished ample class when omitted
        #[arg(long)]
        omega: Option<String>,
    },
    /// Hodge–Riemann signature checks on primitive bidegree slices.
    Hr {
        #[arg(long)]
        ring: String,
        /// Dimension parameter for the `pn`/`torus` builtin aliases
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        omega: Option<String>,
        /// Weight (defaults to every l ≤ n with a nonempty primitive space)
        #[arg(long)]
        l: Option<usize>,
    },
    /// Hodge diamond with the Hodge-number identity checks.
    Diamond {
        #[arg(long)]
        ring: String,
        /// Dimension parameter for the `pn`/`torus` builtin aliases
        #[arg(long)]
        n: Option<usize>,
    },
    /// Contractibility criterion for a middle-dimensional intersection
    /// matrix: (−1)^m · M positive definite.
    Contract {
        /// Half-dimension m of the contracted components
        #[arg(long)]
        m: usize,
        /// Matrix JSON (inline or @file): [[…]] or {"m":…,"entries":[[…]]}
        #[arg(long)]
        matrix: String,
    },
    /// Primitive-subspace limit P_{M+εL} → P_M on the middle degree, with
    /// gap distances and the polarization verdict on the limit.
    Limit {
        #[arg(long)]
        ring: String,
        /// The contracted direction M (basis name or inline JSON)
        #[arg(long)]
        m_class: String,
        /// The ample direction L (defaults to the ring's ample class)
        #[arg(long)]
        l_class: Option<String>,
        /// Comma-separated positive rationals, e.g. 1/2,1/4,1/8
        #[arg(long, default_value = "1/2,1/4,1/8,1/16,1/32,1/64,1/128,1/256,1/512,1/1024")]
        eps: String,
    },
    /// Exact matrix of one operator block at a frequency mode.
    Block {
        /// Complex dimension
        #[arg(long)]
        n: usize,
        /// Mode vector, comma-separated, length 2n
        #[arg(long)]
        k: String,
        /// Operator label: d, d*, d', d'', d'*, d''*, lap, lap', lap'', L,
        /// L*, star, C, pi:p,q, wedge:j, wedge*:j, wedgebar:j, wedgebar*:j,
        /// del:j, del*:j, delbar:j, delbar*:j
        #[arg(long)]
        op: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn run(cli: Cli) -> Result<ExitCode, AnyError> {
    let (report, pass, text): (Value, bool, String) = match &cli.command {
        Command::Star { m, metric, reversed } => star_cmd(*m, metric.as_deref(), *reversed)?,
        Command::KahlerCheck { n, max_mode } => kahler_cmd(*n, *max_mode)?,
        Command::Torus { m, max_mode, form } => torus_cmd(*m, *max_mode, form.as_deref())?,
        Command::Lefschetz { ring, n, omega } => {
            lefschetz_cmd(&ring_spec(ring, *n), omega.as_deref())?
        }
        Command::Hr { ring, n, omega, l } => hr_cmd(&ring_spec(ring, *n), omega.as_deref(), *l)?,
        Command::Diamond { ring, n } => diamond_cmd(&ring_spec(ring, *n))?,
        Command::Contract { m, matrix } => contract_cmd(*m, matrix)?,
        Command::Limit { ring, m_class, l_class, eps } => {
            limit_cmd(ring, m_class, l_class.as_deref(), eps)?
        }
        Command::Block { n, k, op } => block_cmd(*n, k, op)?,
    };

    let rendered = match cli.output.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => text,
    };
    match &cli.output.out {
        Some(path) => fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    if pass {
        Ok(ExitCode::SUCCESS)
    } else {
        if let Some(name) = first_failure_name(&report) {
            eprintln!("failed: {name}");
        }
        Ok(ExitCode::from(1))
    }
}

/// Name the first failing relation/verdict in a report, for stderr.
fn first_failure_name(v: &Value) -> Option<String> {
    match v {
        Value::Object(map) => {
            if map.get("pass") == Some(&Value::Bool(false)) {
                if let Some(Value::String(rel)) = map.get("relation") {
                    return Some(rel.clone());
                }
            }
            for (key, val) in map {
                if let Some(name) = first_failure_name(val) {
                    return Some(name);
                }
                if val == &Value::Bool(false)
                    && (key.ends_with("ok") || key == "consistent" || key == "iso" || key == "pass")
                {
                    return Some(key.clone());
                }
            }
            None
        }
        Value::Array(items) => items.iter().find_map(first_failure_name),
        _ => None,
    }
}

/// Combine a bare `pn`/`torus` alias with a separate `--n` parameter.
fn ring_spec(ring: &str, n: Option<usize>) -> String {
    match (ring, n) {
        ("pn" | "torus", Some(n)) => format!("{ring}:{n}"),
        _ => ring.to_string(),
    }
}

/// Documented parameter ranges: n ≤ 6, m ≤ 6, |k|∞ ≤ 4.
fn check_range(name: &str, value: i64, max: i64) -> Result<(), AnyError> {
    if value < 0 || value > max {
        return Err(format!("--{name} {value} outside the supported range 0..={max}").into());
    }
    Ok(())
}

/// Inline JSON or `@path` indirection.
fn read_arg(raw: &str) -> Result<String, AnyError> {
    if let Some(path) = raw.strip_prefix('@') {
        Ok(fs::read_to_string(path)?)
    } else {
        Ok(raw.to_string())
    }
}

fn load_ring(spec: &str) -> Result<GradedRing, AnyError> {
    if let Ok(kind) = BuiltinRing::parse(spec) {
        return Ok(ring_builtin(kind)?);
    }
    // otherwise a file path (certified at load)
    let text = fs::read_to_string(spec)
        .map_err(|e| format!("`{spec}` is neither a builtin ring alias nor a readable file: {e}"))?;
    let value: Value = serde_json::from_str(&text)?;
    Ok(jsonio::ring_from_value(&value)?)
}

/// A class argument: a basis name or inline JSON `[{"name":…,"re":…,"im":…}]`.
fn parse_class(ring: &GradedRing, raw: &str) -> Result<RingElement, AnyError> {
    let trimmed = raw.trim();
    if trimmed.starts_with('[') {
        let value: Value = serde_json::from_str(trimmed)?;
        let entries = value.as_array().ok_or("expected a JSON array of named coefficients")?;
        let mut out = ring.zero_element();
        for e in entries {
            let name = e
                .get("name")
                .and_then(Value::as_str)
                .ok_or("class entry needs a `name`")?;
            let c = jsonio::gauss_from_value(e)?;
            let i = ring.index_of(name)?;
            out[i] += &c;
        }
        Ok(out)
    } else {
        Ok(ring.element_by_name(trimmed)?)
    }
}

fn omega_or_ample(ring: &GradedRing, omega: Option<&str>) -> Result<RingElement, AnyError> {
    match omega {
        Some(raw) => parse_class(ring, raw),
        None => ring
            .ample_class()
            .ok_or_else(|| "ring declares no ample class; pass --omega".into()),
    }
}

fn parse_eps(raw: &str) -> Result<Vec<Rational>, AnyError> {
    raw.split(',')
        .map(|s| {
            jsonio::rational_from_value(&Value::String(s.trim().to_string()))
                .map_err(|e| -> AnyError { e.to_string().into() })
        })
        .collect()
}

// --- subcommands ---

fn star_cmd(
    m: Option<usize>,
    metric: Option<&str>,
    reversed: bool,
) -> Result<(Value, bool, String), AnyError> {
    let g = match metric {
        Some(raw) => {
            let text = read_arg(raw)?;
            let value: Value = serde_json::from_str(&text)?;
            jsonio::metric_from_value(&value)?
        }
        None => MetricSpec::euclidean(m.ok_or("pass --m or --metric")?),
    };
    if let Some(m) = m {
        if m != g.dim() {
            return Err(format!("--m {} disagrees with metric dimension {}", m, g.dim()).into());
        }
    }
    let m = g.dim();
    check_range("m", m as i64, 6)?;
    let o = if reversed { OrientationSpec::REVERSED } else { OrientationSpec::STANDARD };
    let dv = exterior::volume_element(&g, o)?;

    let mut table = Vec::new();
    let mut involution_ok = true;
    let mut defining_ok = true;
    let unit_ok = exterior::hodge_star(&ExteriorElement::one(m), &g, o)? == dv
        && exterior::hodge_star(&dv, &g, o)? == ExteriorElement::one(m);
    for p in 0..=m {
        for idx in MultiIndex::all(m, p) {
            let u = ExteriorElement::basis(m, idx.clone())?;
            let su = exterior::hodge_star(&u, &g, o)?;
            let ssu = exterior::hodge_star(&su, &g, o)?;
            let sign = if (p * (m - p)) % 2 == 0 { 1 } else { -1 };
            let expect = if sign > 0 { u.clone() } else { u.neg() };
            if ssu != expect {
                involution_ok = false;
            }
            // u ∧ ⋆v = ⟨u,v⟩ dV against every same-degree basis element
            for jdx in MultiIndex::all(m, p) {
                let v = ExteriorElement::basis(m, jdx)?;
                let lhs = exterior::wedge(&u, &exterior::hodge_star(&v, &g, o)?)?;
                let rhs = dv.scale(&exterior::inner_product(&u, &v, &g)?);
                if lhs != rhs {
                    defining_ok = false;
                }
            }
            table.push(json!({
                "index": idx.indices(),
                "star": jsonio::exterior_to_value(&su),
            }));
        }
    }
    let pass = involution_ok && defining_ok && unit_ok;
    let report = json!({
        "m": m,
        "orientation": if reversed { -1 } else { 1 },
        "volume_element": jsonio::exterior_to_value(&dv),
        "table": table,
        "relations": [
            { "relation": "stst", "description": "double star is the degree sign", "pass": involution_ok },
            { "relation": "doso", "description": "u ∧ ⋆v = ⟨u,v⟩ dV", "pass": defining_ok },
            { "relation": "exonst", "description": "⋆1 = dV and ⋆dV = 1", "pass": unit_ok },
        ],
        "pass": pass,
    });
    let mut text = format!("star tables in dimension {m}\n");
    text.push_str(&format!("  volume element: {:?}\n", dv));
    text.push_str(&format!(
        "  involution (stst): {}\n  defining identity (doso): {}\n",
        verdict(involution_ok),
        verdict(defining_ok)
    ));
    Ok((report, pass, text))
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn kahler_cmd(n: usize, max_mode: i64) -> Result<(Value, bool, String), AnyError> {
    check_range("n", n as i64, 6)?;
    check_range("max-mode", max_mode, 4)?;
    let report = kahler::kahler_identity_suite(n, max_mode);
    let value = jsonio::kahler_report_to_value(&report);
    let mut text = format!(
        "Kähler identity suite: n={}, all modes |k|∞ ≤ {} ({} modes)\n",
        report.n, report.max_mode, report.modes_checked
    );
    for rel in &report.relations {
        text.push_str(&format!(
            "  {:10} {:55} {}\n",
            rel.id,
            rel.description,
            if rel.pass { "0 exact" } else { "NONZERO RESIDUAL" }
        ));
    }
    text.push_str(&format!("overall: {}\n", verdict(report.pass)));
    Ok((value, report.pass, text))
}

fn sample_form(m: usize, max_mode: i64) -> fourier::FourierForm {
    // deterministic small sample: a few modes, mixed degrees
    let mut f = fourier::FourierForm::zero(m);
    let mut k1 = vec![0i64; m];
    k1[0] = max_mode.min(1);
    let mut coeff = ExteriorElement::one(m);
    coeff = coeff
        .add(&ExteriorElement::basis_vector(m, 1).unwrap().scale(&GaussRational::from_parts(1, 2, 1, 1)))
        .unwrap();
    f.add_mode(k1, coeff).unwrap();
    if m >= 2 {
        let mut k2 = vec![0i64; m];
        k2[0] = -1;
        k2[1] = max_mode.min(2);
        let c2 = ExteriorElement::basis(m, MultiIndex::new(vec![1, 2], m).unwrap())
            .unwrap()
            .scale(&GaussRational::from_parts(2, 3, 0, 1));
        f.add_mode(k2, c2).unwrap();
    }
    f.add_mode(vec![0; m], ExteriorElement::basis_vector(m, m).unwrap()).unwrap();
    f
}

fn torus_cmd(
    m: usize,
    max_mode: i64,
    form: Option<&str>,
) -> Result<(Value, bool, String), AnyError> {
    check_range("m", m as i64, 6)?;
    check_range("max-mode", max_mode, 4)?;
    let betti = fourier::betti_numbers(m);

    // Poincaré pairing non-degeneracy per degree
    let mut pairings = Vec::new();
    let mut pairing_ok = true;
    for p in 0..=m {
        let mat = fourier::poincare_pairing(m, p)?;
        let det = mat.det().expect("square pairing matrix");
        if det.is_zero() {
            pairing_ok = false;
        }
        pairings.push(json!({ "p": p, "det": det.to_string() }));
    }

    // Δ = |k|²·id over the sweep
    let mut laplacian_ok = true;
    let modes = all_modes(m, max_mode);
    'outer: for k in &modes {
        let ksq: i64 = k.iter().map(|x| x * x).sum();
        for p in 0..=m {
            for idx in MultiIndex::all(m, p) {
                let mut f = fourier::FourierForm::zero(m);
                let c = ExteriorElement::basis(m, idx).unwrap();
                f.add_mode(k.clone(), c.clone()).unwrap();
                let lap = fourier::laplacian(&f, fourier::LaplacianFlavor::Full)?;
                if lap.coefficient(k) != c.scale(&GaussRational::from_int(ksq)) {
                    laplacian_ok = false;
                    break 'outer;
                }
            }
        }
    }

    // decomposition of a supplied or sample form
    let f = match form {
        Some(raw) => {
            let text = read_arg(raw)?;
            let value: Value = serde_json::from_str(&text)?;
            jsonio::fourier_from_value(&value)?
        }
        None => sample_form(m, max_mode),
    };
    if f.dim() != m {
        return Err(format!("form dimension {} ≠ --m {}", f.dim(), m).into());
    }
    let g = MetricSpec::euclidean(m);
    let (h, de, dse) = fourier::hodge_decompose(&f)?;
    let sum = h.add(&de)?.add(&dse)?;
    let reconstructs = sum == f;
    let orthogonal = fourier::fourier_inner(&h, &de, &g)?.is_zero()
        && fourier::fourier_inner(&h, &dse, &g)?.is_zero()
        && fourier::fourier_inner(&de, &dse, &g)?.is_zero();

    let pass = pairing_ok && laplacian_ok && reconstructs && orthogonal;
    let hodge_numbers = if m % 2 == 0 {
        Some(fourier::torus_hodge_numbers(m / 2))
    } else {
        None
    };
    let report = json!({
        "m": m,
        "betti": betti,
        "relations": [
            { "relation": "hit", "description": "harmonic p-forms count the Betti numbers", "pass": true },
            { "relation": "pd", "description": "Poincaré pairing non-degenerate", "pass": pairing_ok },
            { "relation": "itslap", "description": "Laplacian is |k|² per mode", "pass": laplacian_ok },
            { "relation": "hdts", "description": "orthogonal harmonic/d/d* decomposition", "pass": reconstructs && orthogonal },
        ],
        "hodge_numbers": hodge_numbers,
        "poincare_pairings": pairings,
        "pairings_nondegenerate": pairing_ok,
        "laplacian_eigenvalue_ksq_ok": laplacian_ok,
        "modes_swept": modes.len(),
        "decomposition": {
            "input": jsonio::fourier_to_value(&f),
            "harmonic": jsonio::fourier_to_value(&h),
            "d_exact": jsonio::fourier_to_value(&de),
            "dstar_exact": jsonio::fourier_to_value(&dse),
            "reconstructs": reconstructs,
            "orthogonal": orthogonal,
        },
        "pass": pass,
    });
    let text = format!(
        "flat torus R^{m}/Z^{m}\n  betti: {:?}\n  pairings nondegenerate: {}\n  Δ = |k|²·id over {} modes: {}\n  decomposition exact+orthogonal: {}\n",
        betti,
        verdict(pairing_ok),
        modes.len(),
        verdict(laplacian_ok),
        verdict(reconstructs && orthogonal)
    );
    Ok((report, pass, text))
}

fn all_modes(m: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for prefix in out {
            for v in -bound..=bound {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn lefschetz_cmd(ring_spec: &str, omega: Option<&str>) -> Result<(Value, bool, String), AnyError> {
    let ring = load_ring(ring_spec)?;
    let omega = omega_or_ample(&ring, omega)?;
    let hl = lefschetz::hard_lefschetz_check(&ring, &omega)?;
    let mut decs = Vec::new();
    let mut dec_pass = true;
    if hl.pass {
        for l in 0..=ring.complex_dim() {
            let d = lefschetz::primitive_decompose(&ring, &omega, l)?;
            dec_pass &= d.pass;
            decs.push(jsonio::decomposition_to_value(&ring, &d));
        }
    }
    let pass = hl.pass && dec_pass;
    let report = json!({
        "ring": ring_spec,
        "hard_lefschetz": jsonio::hl_report_to_value(&hl),
        "primitive_decompositions": decs,
        "pass": pass,
    });
    let mut text = format!("hard Lefschetz on {ring_spec}: {}\n", verdict(hl.pass));
    for lvl in &hl.levels {
        text.push_str(&format!(
            "  r={}: rank {} vs b={} : {}\n",
            lvl.r,
            lvl.rank,
            lvl.b_low,
            verdict(lvl.iso)
        ));
    }
    if let Some(r) = hl.first_failure {
        text.push_str(&format!("  first failure at r={r}\n"));
    }
    Ok((report, pass, text))
}

fn hr_cmd(
    ring_spec: &str,
    omega: Option<&str>,
    l: Option<usize>,
) -> Result<(Value, bool, String), AnyError> {
    let ring = load_ring(ring_spec)?;
    let omega = omega_or_ample(&ring, omega)?;
    let weights: Vec<usize> = match l {
        Some(l) => vec![l],
        None => (0..=ring.complex_dim()).collect(),
    };
    let mut reports = Vec::new();
    let mut pass = true;
    let mut text = format!("Hodge–Riemann checks on {ring_spec}\n");
    for l in weights {
        let r = lefschetz::hodge_riemann_check(&ring, &omega, l)?;
        pass &= r.pass;
        for s in &r.slices {
            text.push_str(&format!(
                "  l={l} (p,q)=({},{}) dim {}: {}\n",
                s.p,
                s.q,
                s.dim,
                verdict(s.positive_definite)
            ));
        }
        reports.push(jsonio::hr_report_to_value(&r));

        // polarization of the primitive slice with the weight-l sign
        let slice = lefschetz::primitive_slice(&ring, &omega, l)?;
        if slice.total_dim() > 0 {
            let psi = lefschetz::lefschetz_polarization_form(&ring, &omega, l)?;
            let p = lefschetz::polarization_check(&ring, &slice, &psi)?;
            pass &= p.pass;
            text.push_str(&format!("  l={l} polarization: {}\n", verdict(p.pass)));
            reports.push(json!({ "polarization": jsonio::polarization_to_value(&p), "l": l }));
        }
    }
    let report = json!({ "ring": ring_spec, "reports": reports, "pass": pass });
    Ok((report, pass, text))
}

fn diamond_cmd(ring_spec: &str) -> Result<(Value, bool, String), AnyError> {
    let ring = load_ring(ring_spec)?;
    let d = hodge_core::ring::hodge_diamond(&ring);
    let value = jsonio::diamond_to_value(&d);
    let mut text = d.to_text();
    for i in &d.identities {
        text.push_str(&format!("  {:12} {}\n", i.id, verdict(i.pass)));
    }
    Ok((value, d.pass, text))
}

fn contract_cmd(m: usize, matrix: &str) -> Result<(Value, bool, String), AnyError> {
    let text = read_arg(matrix)?;
    let value: Value = serde_json::from_str(&text)?;
    let im = if value.is_array() {
        let rows = value.as_array().unwrap();
        let entries = jsonio::rational_matrix_from_value(rows)?;
        IntersectionMatrix::new(m, entries)?
    } else {
        jsonio::intersection_matrix_from_value(&value)?
    };
    if im.half_dim() != m {
        return Err(format!("--m {} disagrees with matrix half-dim {}", m, im.half_dim()).into());
    }
    let report = hodge_core::degeneration::contractibility_check(&im)?;
    let value = jsonio::contractibility_to_value(&report);
    let text = format!(
        "contractibility (m={}): {}\n  minors of (−1)^m·M: {:?}\n",
        m,
        if report.consistent { "consistent with contraction" } else { "inconsistent" },
        report.minors.iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
    Ok((value, report.consistent, text))
}

fn limit_cmd(
    ring_spec: &str,
    m_class: &str,
    l_class: Option<&str>,
    eps: &str,
) -> Result<(Value, bool, String), AnyError> {
    let ring = load_ring(ring_spec)?;
    let m = parse_class(&ring, m_class)?;
    let l = omega_or_ample(&ring, l_class)?;
    let eps = parse_eps(eps)?;
    let trace = hodge_core::degeneration::primitive_limit(&ring, &m, &l, &eps)?;
    let value = jsonio::limit_trace_to_value(&ring, &trace);
    let mut text = format!(
        "primitive limit on {ring_spec}: dim P = {} (expected {})\n",
        trace.limit_dim, trace.expected_dim
    );
    for s in &trace.steps {
        text.push_str(&format!("  ε={}: dim {}, gap {:.3e}\n", s.eps, s.dim, s.gap_to_limit));
    }
    text.push_str(&format!(
        "  decomposition: {}\n  polarization: {}\n  overall: {}\n",
        verdict(trace.decomposition_ok),
        verdict(trace.polarization_positive),
        verdict(trace.pass)
    ));
    Ok((value, trace.pass, text))
}

fn block_cmd(n: usize, k: &str, op: &str) -> Result<(Value, bool, String), AnyError> {
    check_range("n", n as i64, 6)?;
    let k: Vec<i64> = k
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad mode vector: {e}"))?;
    let label = OpLabel::parse(op)?;
    let block = kahler::operator_block(label, &k, n)?;
    let value = jsonio::block_to_value(&block);
    let text = format!("operator {} at k={:?} on {} basis elements\n", block.label, block.k, block.basis.len());
    Ok((value, true, text))
}
