use serde::Serialize;

use sasaki_core::exact::{default_width, format_rational};
use sasaki_core::{
    bouquet_table, csc_ray_with_width, exhaustion_bound, extremal_profile, extremal_region_with_width,
    extremal_verdict, null_scalar_solutions, quotient_orbifold, regular_ray_extremal, sasaki_scalar,
    Bundle, CscRay, ExhaustionReport, ExtremalProfile, ExtremalRegion, ExtremalVerdict, JoinParams,
    QuotientOrbifold, Rational, RealAlgebraic, RegularRayReport, ScalarReport, WeightVector,
};

use crate::args::{Format, Join};
use crate::output::{emit, grid, KvTable};
use crate::CliError;

fn join_line(join: &Join) -> String {
    format!("{}  (k={} m={} {})", join.params, join.k, join.m, join.bundle)
}

/// An irrational root as its exact isolating interval `(lo, hi]`.
pub fn root_text(root: &RealAlgebraic) -> String {
    match root {
        RealAlgebraic::Rational(r) => format_rational(r),
        RealAlgebraic::Algebraic(iv) => {
            format!("({}, {}]", format_rational(iv.lo()), format_rational(iv.hi()))
        }
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    params: JoinParams,
    k: u64,
    m: u64,
    n: i64,
    c1_coefficient: i64,
    bundle: Bundle,
    manifold: &'static str,
    exhaustion: ExhaustionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<WeightVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<QuotientOrbifold>,
}

pub fn classify(join: &Join, v: Option<WeightVector>, format: Format) -> Result<String, CliError> {
    let inv = sasaki_core::contact_invariants(&join.params);
    let quotient = v.map(|v| quotient_orbifold(&join.params, v)).transpose()?;
    let out = ClassifyOut {
        params: join.params,
        k: inv.k,
        m: inv.m,
        n: inv.n,
        c1_coefficient: inv.c1_coefficient,
        bundle: inv.bundle_type,
        manifold: inv.bundle_type.manifold(),
        exhaustion: exhaustion_bound(&join.params),
        v,
        quotient,
    };
    emit(format, "classify", &out, |o| {
        let mut t = KvTable::default();
        t.row("join", o.params)
            .row("manifold", format!("{} ({})", o.manifold, o.bundle))
            .row("c1(D)", format!("{}γ", o.c1_coefficient))
            .row("k m n", format!("{} {} {}", o.k, o.m, o.n));
        if o.params.weights_swapped {
            t.row("note", "weights given as w1 < w2 were swapped");
        }
        let verdict = if o.exhaustion.holds { "every ray is extremal" } else { "not guaranteed" };
        t.row("exhaustion", format!("g ≤ 1 + 3·l·w2 = {}: {verdict}", o.exhaustion.threshold));
        if let (Some(v), Some(q)) = (o.v, &o.quotient) {
            t.row("ray", format!("v={v}"))
                .row("quotient n", q.n)
                .row("branch", format!("zero section {}, infinity section {}", q.q, q.p))
                .row("r", format_rational(&q.r))
                .row("s_Σ", format_rational(&q.s_sigma));
        }
        t.render()
    })
}

pub fn bouquet(g: u64, k: u64, bundle: Bundle, format: Format) -> Result<String, CliError> {
    let table = bouquet_table(g, k, bundle)?;
    emit(format, "bouquet", &table, |t| t.render())
}

#[derive(Serialize)]
struct CscOut<'a> {
    params: JoinParams,
    #[serde(flatten)]
    ray: &'a CscRay,
}

pub fn csc(join: &Join, width: Option<&Rational>, format: Format) -> Result<String, CliError> {
    let width = width.cloned().unwrap_or_else(default_width);
    let ray = csc_ray_with_width(&join.params, &width)?;
    let out = CscOut { params: join.params, ray: &ray };
    emit(format, "csc", &out, |o| {
        let mut t = KvTable::default();
        t.row("join", join_line(join))
            .row("cubic", format!("{} = 0", o.ray.cubic.display_in("c")))
            .row("root", root_text(&o.ray.root))
            .row("approx", format!("{:.12}", o.ray.root.approx()))
            .row("regularity", o.ray.regularity.as_str());
        if let Some(v) = o.ray.v {
            t.row("v", v);
        }
        t.render()
    })
}

#[derive(Serialize)]
struct RayVerdictOut {
    params: JoinParams,
    v: WeightVector,
    verdict: ExtremalVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<ExtremalProfile>,
}

fn verdict_rows(t: &mut KvTable, verdict: &ExtremalVerdict) {
    t.row("verdict", verdict.strength.as_str());
    if let Some(p) = verdict.positivity {
        t.row("positivity", format!("{p:?}"));
    }
}

pub fn extremal(join: &Join, v: Option<WeightVector>, format: Format) -> Result<String, CliError> {
    let Some(v) = v else {
        let report = regular_ray_extremal(join.params.g, join.k, join.m, join.bundle)?;
        return emit(format, "extremal", &report, |r: &RegularRayReport| {
            let mut t = KvTable::default();
            t.row("join", join_line(join)).row("ray", "v=(1,1) (regular)");
            verdict_rows(&mut t, &r.verdict);
            if let Some(h) = &r.h {
                t.row("h(z)", h.display_in("z"));
            }
            if let (Some(r_), Some(s)) = (&r.r, &r.s_sigma) {
                t.row("r", format_rational(r_)).row("s_Σ", format_rational(s));
            }
            if let Some(z) = &r.min_location {
                t.row("min at", format!("z = {}", format_rational(z)));
            }
            if let Some(m) = &r.m_value {
                t.row("M", format_rational(m));
            }
            if r.h.is_none() {
                t.row("note", "n = 0: product of constant curvature metrics");
            }
            t.render()
        });
    };
    let verdict = extremal_verdict(&join.params, v)?;
    let profile = if join.params.is_product_ray(v) {
        None
    } else {
        Some(extremal_profile(&join.params, v)?)
    };
    let out = RayVerdictOut { params: join.params, v, verdict, profile };
    emit(format, "extremal", &out, |o| {
        let mut t = KvTable::default();
        t.row("join", join_line(join)).row("ray", format!("v={}", o.v));
        verdict_rows(&mut t, &o.verdict);
        if let Some(p) = &o.profile {
            t.row("h(z)", p.h.display_in("z"))
                .row("F(z)", p.f.display_in("z"))
                .row("r", format_rational(&p.r))
                .row("p q", format!("{} {}", p.p, p.q))
                .row("s_Σ", format_rational(&p.s_sigma));
        }
        if let Some(w) = &o.verdict.witness {
            t.row(
                "min on [-1,1]",
                format!("h({}) = {}", format_rational(&w.location), format_rational(&w.value)),
            );
        }
        if o.profile.is_none() {
            t.row("note", "v is proportional to w: the product metric");
        }
        t.render()
    })
}

#[derive(Serialize)]
struct RegionOut<'a> {
    admissible: String,
    #[serde(flatten)]
    region: &'a ExtremalRegion,
}

pub fn region(join: &Join, width: Option<&Rational>, format: Format) -> Result<String, CliError> {
    let width = width.cloned().unwrap_or_else(default_width);
    let region = extremal_region_with_width(&join.params, &width)?;
    let out = RegionOut { admissible: region.render_admissible(), region: &region };
    emit(format, "region", &out, |o| {
        let mut out = format!("{}\nslope c = v2/v1 in (0, ∞)\n", join_line(join));
        out.push_str(&o.region.render());
        out.push_str(&format!("admissible: {}\n", o.admissible));
        out
    })
}

#[derive(Serialize)]
struct CurvatureOut<'a> {
    params: JoinParams,
    v: WeightVector,
    #[serde(flatten)]
    report: &'a ScalarReport,
}

pub fn curvature(join: &Join, v: Option<WeightVector>, format: Format) -> Result<String, CliError> {
    let v = v.ok_or_else(|| CliError::Usage("curvature needs a ray: --v v1,v2 or --c p/q".into()))?;
    let report = sasaki_scalar(&join.params, v)?;
    let out = CurvatureOut { params: join.params, v, report: &report };
    emit(format, "curvature", &out, |o| {
        let mut t = KvTable::default();
        t.row("join", join_line(join))
            .row("ray", format!("v={}", o.v))
            .row("A", format!("{} ≈ {}", o.report.a, o.report.a.decimal()))
            .row("B", format!("{} ≈ {}", o.report.b, o.report.b.decimal()))
            .row("transverse", &o.report.transverse);
        match (&o.report.sasaki_const, o.report.type3) {
            (Some(s), Some(kind)) => {
                t.row("sasaki", format!("{s} (constant)")).row("type", kind.as_str());
            }
            _ => {
                t.row("sasaki", "transverse - 4 (not constant)");
            }
        }
        t.render()
    })
}

pub fn null_scalar(g: u64, bound: u64, format: Format) -> Result<String, CliError> {
    let report = null_scalar_solutions(g, bound)?;
    emit(format, "null-scalar", &report, |r| {
        let mut out = format!("g = {}, l ≤ {}: {} solution(s)\n", r.g, r.search_bound, r.solutions.len());
        if !r.solutions.is_empty() {
            let rows: Vec<Vec<String>> = r
                .solutions
                .iter()
                .map(|s| {
                    vec![
                        s.l.to_string(),
                        format!("({},{})", s.w1, s.w2),
                        format!("({},{})", s.v1, s.v2),
                        s.bundle.to_string(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["l", "w", "v", "bundle"], &rows));
        }
        if let Some(note) = &r.note {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    })
}
