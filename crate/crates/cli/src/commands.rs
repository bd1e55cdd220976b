use std::fmt::Write as _;

use ghys_core::birkhoff::{
    descent_chain, first_return_matrix, genus_one_section, lefschetz_audit_capped, orbifold_section_census,
    pair_of_pants_data, pants_euler_routes, SurfaceData,
};
use ghys_core::graph::{
    delta_hyperbolicity, explore_ball, export_graph, ghys_distance_upper_bound, ExploreParams, ExploredBall,
    ExportFormat, GraphNode,
};
use ghys_core::sl2z::{
    class_normal_form, conjugacy_equal, cyclic_normal_form, fixed_point_lattice, periodic_point_count, rl_factorize,
    word_to_matrix, ConjClass, ConjugacyGroup, IntMatrix2, RLWord, Sign,
};
use ghys_core::torus::{build_parallelogram, formula_fixed_points, stable_tangency_count, Embedding};
use ghys_core::{Error, Result};
use serde_json::{json, Value};

use crate::svg::emit_parallelogram_svg;
use crate::{CliConfig, Command, GraphFormat, KindArg};

pub(crate) struct Output {
    pub text: String,
    pub json: Value,
    /// Printed verbatim regardless of `--output` (DOT, CSV).
    pub raw: Option<String>,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, raw: None }
    }
}

fn word(s: &str) -> Result<RLWord> {
    s.parse()
}

fn matrix(s: &str) -> Result<IntMatrix2> {
    s.parse()
}

fn group(sl2: bool) -> ConjugacyGroup {
    if sl2 {
        ConjugacyGroup::Sl2
    } else {
        ConjugacyGroup::Gl2
    }
}

fn surface_lines(out: &mut String, s: &SurfaceData) {
    for b in &s.boundary {
        let plural = if b.circle_count == 1 { "circle" } else { "circles" };
        writeln!(
            out,
            "  {}: {} {plural} of class ({},{})",
            b.orbit_id, b.circle_count, b.class_per_circle.0, b.class_per_circle.1
        )
        .unwrap();
    }
}

pub(crate) fn dispatch(cmd: &Command, cfg: &CliConfig) -> Result<Output> {
    match cmd {
        Command::Factor { matrix: m } => factor(&matrix(m)?),
        Command::Word { word: w } => word_info(&word(w)?),
        Command::Conj { w1, w2, gl2 } => conj(&word(w1)?, &word(w2)?, *gl2),
        Command::Fixed { matrix: m, power, limit } => fixed(&matrix(m)?, *power, *limit),
        Command::Pants { word: w, svg } => pants(&word(w)?, svg.as_deref()),
        Command::Section { word: w } => section(&word(w)?),
        Command::Descend { input } => descend(input),
        Command::Orbifold { genus, orders } => orbifold(*genus, orders),
        Command::Ghys { w1, w2, max_radius } => ghys(&word(w1)?, &word(w2)?, *max_radius),
        Command::Graph { kind, center, radius, format, sl2 } => {
            let center = match kind {
                KindArg::Word => GraphNode::word(&word(center)?, group(*sl2))?,
                KindArg::Conj => GraphNode::Conj(conj_center(center)?),
            };
            let ball = ball(cfg, &center, *radius, group(*sl2))?;
            let fmt = match format {
                GraphFormat::Dot => ExportFormat::Dot,
                GraphFormat::Json => ExportFormat::Json,
            };
            let text = export_graph(&ball, fmt);
            Ok(Output { text: text.clone(), json: Value::Null, raw: Some(text) })
        }
        Command::Delta { center, radius, margin, sl2 } => {
            let node = GraphNode::word(&word(center)?, group(*sl2))?;
            let ball = ball(cfg, &node, *radius, group(*sl2))?;
            let est = delta_hyperbolicity(&ball, *margin)?;
            let text = format!(
                "δ: {}\ncore radius: {}\ncore size: {}\nball size: {}\n",
                est.delta,
                est.core_radius,
                est.core_size,
                ball.len()
            );
            let json = json!({
                "center": node.to_string(),
                "radius": radius,
                "margin": margin,
                "delta": est.delta.to_string(),
                "core_radius": est.core_radius,
                "core_size": est.core_size,
                "ball_size": ball.len(),
            });
            Ok(Output::new(text, json))
        }
        Command::Audit { word: w, max_period, csv } => {
            let table = lefschetz_audit_capped(&word(w)?, *max_period, cfg.audit_cap)?;
            let json = serde_json::to_value(&table).expect("json");
            let mut out = Output::new(format!("word: {}\n{}", table.word, table.to_text()), json);
            if *csv {
                out.raw = Some(table.to_csv());
            }
            Ok(out)
        }
    }
}

fn ball(cfg: &CliConfig, center: &GraphNode, radius: u32, group: ConjugacyGroup) -> Result<ExploredBall> {
    let node_budget = usize::try_from(cfg.node_budget).unwrap_or(usize::MAX);
    let params = ExploreParams { group, trace_cap: cfg.trace_cap, node_budget };
    match cfg.cache() {
        Some(cache) => cache.get_or_explore(center, radius, &params),
        None => explore_ball(center, radius, &params),
    }
}

/// A conjugacy-graph center: a word, a matrix, or a class label such as `-R^2`.
fn conj_center(s: &str) -> Result<ConjClass> {
    if let Ok(w) = s.parse::<RLWord>() {
        w.require_mixed()?;
        return Ok(ConjClass::Hyperbolic(Sign::Plus, cyclic_normal_form(&w)));
    }
    if let Ok(m) = s.parse::<IntMatrix2>() {
        return ghys_core::sl2z::classify_conjugacy(&m);
    }
    s.parse()
}

fn factor(m: &IntMatrix2) -> Result<Output> {
    let f = rl_factorize(m)?;
    let text = format!("word: {}\nconjugator: {}\n", f.word, f.conjugator);
    let json = json!({
        "matrix": m.to_string(),
        "trace": m.trace().to_string(),
        "word": f.word,
        "conjugator": f.conjugator,
    });
    Ok(Output::new(text, json))
}

fn word_info(w: &RLWord) -> Result<Output> {
    let m = word_to_matrix(w);
    let cyclic = cyclic_normal_form(w);
    let gl2 = class_normal_form(w, ConjugacyGroup::Gl2);
    let text = format!(
        "word: {w}\nmatrix: {m}\ntrace: {}\ncyclic normal form: {cyclic}\ngl2 normal form: {gl2}\n",
        m.trace()
    );
    let json = json!({
        "word": w,
        "matrix": m,
        "trace": m.trace().to_string(),
        "mixed": w.is_mixed(),
        "cyclic_normal_form": cyclic,
        "gl2_normal_form": gl2,
    });
    Ok(Output::new(text, json))
}

fn conj(w1: &RLWord, w2: &RLWord, gl2: bool) -> Result<Output> {
    w1.require_mixed()?;
    w2.require_mixed()?;
    let g = group(!gl2);
    let equal = conjugacy_equal(w1, w2, g);
    let (n1, n2) = (class_normal_form(w1, g), class_normal_form(w2, g));
    let gname = if gl2 { "GL2" } else { "SL2" };
    let text = format!("group: {gname}\nconjugate: {equal}\nnormal forms: {n1} {n2}\n");
    let json = json!({"group": gname, "conjugate": equal, "normal_forms": [n1, n2]});
    Ok(Output::new(text, json))
}

fn fixed(m: &IntMatrix2, power: u32, limit: u64) -> Result<Output> {
    let count = periodic_point_count(m, power)?;
    let listed = count <= limit.into();
    let points = if listed { fixed_point_lattice(m, power)? } else { Vec::new() };
    let mut text = format!("matrix: {m}\npower: {power}\ncount: {count}\n");
    if listed {
        text.push_str("points:\n");
        for p in &points {
            writeln!(text, "  {p}").unwrap();
        }
    } else {
        writeln!(text, "points: omitted (more than {limit})").unwrap();
    }
    let json = json!({
        "matrix": m,
        "power": power,
        "count": count.to_string(),
        "points": if listed { json!(points) } else { Value::Null },
    });
    Ok(Output::new(text, json))
}

fn pants(w: &RLWord, svg_path: Option<&std::path::Path>) -> Result<Output> {
    let p = build_parallelogram(w)?;
    let surface = pair_of_pants_data(w)?;
    let (cells, _) = pants_euler_routes(w)?;
    let tangencies = match p.embedding {
        Embedding::Generic => Some(stable_tangency_count(w)?),
        Embedding::DegenerateMN => None,
    };
    let formula = formula_fixed_points(&p.rw)?;
    if let Some(path) = svg_path {
        std::fs::write(path, emit_parallelogram_svg(&p, &formula.points))?;
    }
    let embedding = match p.embedding {
        Embedding::Generic => "generic",
        Embedding::DegenerateMN => "degenerate (M = N)",
    };
    let mut text = format!("word: {w}\nRW: {}\nembedding: {embedding}\n", p.rw);
    writeln!(text, "O: {}  M: {}  N: {}", p.torus_o(), p.torus_m(), p.torus_n()).unwrap();
    writeln!(text, "pants: χ {}, genus {}", surface.euler_blowup, surface.genus).unwrap();
    surface_lines(&mut text, &surface);
    if let Some(t) = tangencies {
        writeln!(text, "stable tangencies: {t}").unwrap();
    }
    writeln!(text, "fixed points of RW: {}", formula.points.len()).unwrap();
    let mut json = json!({
        "parallelogram": ghys_core::torus::parallelogram_json(&p),
        "pants": surface.to_json(),
        "euler_cells": cells,
        "stable_tangencies": tangencies,
        "fixed_points": formula.points,
    });
    if let Some(path) = svg_path {
        json["svg"] = json!(path.display().to_string());
    }
    Ok(Output::new(text, json))
}

fn section(w: &RLWord) -> Result<Output> {
    let s = genus_one_section(w)?;
    let fr = first_return_matrix(w)?;
    let mut text = format!(
        "section: χ {}, genus {}, {} circles over {} orbits\nboundary:\n",
        s.euler_blowup,
        s.genus,
        s.boundary_circle_count(),
        s.boundary_orbit_count()
    );
    surface_lines(&mut text, &s);
    writeln!(text, "first-return matrix: {}", fr.matrix).unwrap();
    let json = json!({
        "word": w,
        "surface": s.to_json(),
        "circles": s.boundary_circle_count(),
        "orbits": s.boundary_orbit_count(),
        "first_return": fr,
    });
    Ok(Output::new(text, json))
}

fn descend(input: &str) -> Result<Output> {
    let w = if input.contains(',') {
        rl_factorize(&matrix(input)?)?.word
    } else {
        word(input)?
    };
    let chain = descent_chain(&w)?;
    let mut text = format!("start: {}\n", cyclic_normal_form(&w));
    for (i, s) in chain.steps.iter().enumerate() {
        writeln!(
            text,
            "{}: {} -> {} via {} (trace {} -> {})",
            i + 1,
            s.before,
            s.after,
            s.generator,
            s.trace_before,
            s.trace_after
        )
        .unwrap();
    }
    writeln!(text, "steps: {}\nghys bound to RL: {}", chain.len(), chain.bound()).unwrap();
    let json = json!({"word": w, "steps": chain, "bound": chain.bound()});
    Ok(Output::new(text, json))
}

fn orbifold(genus: u32, orders: &[u32]) -> Result<Output> {
    let c = orbifold_section_census(genus, orders)?;
    let s = &c.surface;
    let text = format!(
        "χ {}, {} boundary circles, genus {}\nhandles {}, cones {}, connector {}\n",
        s.euler_blowup,
        s.boundary_circle_count(),
        s.genus,
        c.chi_handles,
        c.chi_cones,
        c.chi_connector
    );
    Ok(Output::new(text, serde_json::to_value(&c).expect("json")))
}

fn ghys(w1: &RLWord, w2: &RLWord, max_radius: u32) -> Result<Output> {
    if max_radius > 64 {
        return Err(Error::InvalidArgument(format!("max radius {max_radius} above 64")));
    }
    let b = ghys_distance_upper_bound(w1, w2, max_radius)?;
    let text = format!("bound: {b}\n");
    let bound = match b {
        ghys_core::graph::GhysBound::Bound(v) => json!(v),
        ghys_core::graph::GhysBound::Unknown => Value::Null,
    };
    let json = json!({"w1": w1, "w2": w2, "max_radius": max_radius, "bound": bound});
    Ok(Output::new(text, json))
}
