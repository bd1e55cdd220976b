//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::time::{Duration, Instant};

use ghys_core::birkhoff::{
    descent_chain, first_return_matrix, genus_one_section, lefschetz_audit, orbifold_section_census,
};
use ghys_core::graph::{
    delta_hyperbolicity, delta_profile, explore_ball, ghys_distance_upper_bound, ExploreParams, GhysBound, GraphNode,
};
use ghys_core::sl2z::{
    cyclic_normal_form, fixed_point_lattice, rl_factorize, word_to_matrix, IntMatrix2, RLWord,
};
use ghys_core::torus::{build_parallelogram, formula_fixed_points, stable_tangency_count};
use num_bigint::BigInt;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mixed_up_to(n: usize) -> impl Iterator<Item = RLWord> {
    (2..=n).flat_map(RLWord::all_mixed_of_length)
}

fn rw(w: &RLWord) -> IntMatrix2 {
    &IntMatrix2::r() * &word_to_matrix(w)
}

/// `RLⁿ` or `LⁿR`, read off the letters.
fn degenerate_by_spelling(w: &RLWord) -> bool {
    let s = w.to_string();
    let n = s.len() - 1;
    s == format!("R{}", "L".repeat(n)) || s == format!("{}R", "L".repeat(n))
}

fn c1_rl_matrix() -> Check {
    let w: RLWord = "RL".parse().unwrap();
    let start = Instant::now();
    let m = word_to_matrix(&w);
    let lib_time = start.elapsed();
    ensure(m == IntMatrix2::new(2, 1, 1, 1).unwrap(), || format!("word_to_matrix(RL) = {m}"))?;
    ensure(lib_time < Duration::from_millis(1), || format!("took {lib_time:?}"))?;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = ghys_cli::run(["ghys", "word", "RL"], &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    ensure(code == 0 && out.contains("matrix: 2,1;1,1"), || format!("cli exit {code}: {out}"))?;
    Ok(format!("(2 1;1 1) in {lib_time:?}"))
}

fn c2_factorization_round_trip() -> Check {
    let mut n = 0;
    for k in 2..=10 {
        let words: Vec<RLWord> = RLWord::all_mixed_of_length(k).collect();
        ensure(words.len() == (1 << k) - 2, || format!("length {k}: {} words", words.len()))?;
        for w in words {
            let m = word_to_matrix(&w);
            let f = rl_factorize(&m).map_err(|e| format!("{w}: {e}"))?;
            ensure(f.word == cyclic_normal_form(&w), || format!("{w}: got {}", f.word))?;
            ensure(f.verifies(&m), || format!("{w}: conjugator {} fails", f.conjugator))?;
            n += 1;
        }
    }
    Ok(format!("{n} words"))
}

fn c3_fixed_points() -> Check {
    let mut n = 0;
    for w in mixed_up_to(8) {
        let a = rw(&w);
        let f = formula_fixed_points(&a).map_err(|e| format!("{w}: {e}"))?;
        for p in &f.points {
            ensure(p.is_fixed_by(&a), || format!("{w}: {p} not fixed"))?;
        }
        let lattice = fixed_point_lattice(&a, 1).map_err(|e| format!("{w}: {e}"))?;
        let expect: BigInt = a.trace() - 2;
        ensure(BigInt::from(lattice.len()) == expect, || format!("{w}: {} points, tr − 2 = {expect}", lattice.len()))?;
        n += 1;
    }
    Ok(format!("{n} words"))
}

fn c4_embedding() -> Check {
    let (mut generic, mut degenerate) = (0, 0);
    for w in mixed_up_to(8) {
        let p = build_parallelogram(&w).map_err(|e| format!("{w}: {e}"))?;
        let (o, m, n) = (p.torus_o(), p.torus_m(), p.torus_n());
        let distinct = o != m && m != n && o != n;
        ensure(distinct != degenerate_by_spelling(&w), || format!("{w}: O {o} M {m} N {n}"))?;
        if distinct {
            generic += 1;
        } else {
            degenerate += 1;
        }
    }
    Ok(format!("{generic} generic, {degenerate} degenerate, 0 exceptions"))
}

fn c5_section_numbers() -> Check {
    let mut n = 0;
    for w in mixed_up_to(8) {
        let s = genus_one_section(&w).map_err(|e| format!("{w}: {e}"))?;
        let got = (s.euler_blowup, s.boundary_circle_count(), s.genus);
        let want = if degenerate_by_spelling(&w) { (-3, 3, 1) } else { (-4, 4, 1) };
        ensure(got == want, || format!("{w}: {got:?}, expected {want:?}"))?;
        n += 1;
    }
    Ok(format!("{n} words"))
}

fn c6_first_return() -> Check {
    let mut n = 0;
    for w in mixed_up_to(10) {
        let fr = first_return_matrix(&w).map_err(|e| format!("{w}: {e}"))?;
        ensure(fr.matrix == word_to_matrix(&w), || format!("{w}: {}", fr.matrix))?;
        n += 1;
    }
    Ok(format!("{n} words"))
}

fn c7_descent() -> Check {
    let rl: RLWord = "RL".parse().unwrap();
    let mut n = 0;
    for w in mixed_up_to(12) {
        let chain = descent_chain(&w).map_err(|e| format!("{w}: {e}"))?;
        ensure(chain.len() == w.len() - 2, || format!("{w}: {} steps", chain.len()))?;
        let end = chain.steps.last().map(|s| s.after.clone()).unwrap_or_else(|| cyclic_normal_form(&w));
        ensure(end == rl, || format!("{w}: ends at {end}"))?;
        for s in &chain.steps {
            ensure(s.trace_after < s.trace_before, || format!("{w}: trace {} -> {}", s.trace_before, s.trace_after))?;
            ensure(s.trace_before == word_to_matrix(&s.before).trace(), || format!("{w}: stale trace"))?;
        }
        if let Some(last) = chain.steps.last() {
            ensure(last.trace_after == BigInt::from(3), || format!("{w}: last trace {}", last.trace_after))?;
        }
        n += 1;
    }
    Ok(format!("{n} words"))
}

fn c8_orbifold_census() -> Check {
    let c = orbifold_section_census(3, &[3, 3, 3, 3]).map_err(|e| e.to_string())?;
    let got = (c.surface.euler_blowup, c.surface.boundary_circle_count(), c.surface.genus);
    ensure(got == (-19, 19, 1), || format!("(3; 3,3,3,3): {got:?}"))?;
    for g in 1..=10u32 {
        for n in 1..=10usize {
            let c = orbifold_section_census(g, &vec![3; n]).map_err(|e| format!("g {g} n {n}: {e}"))?;
            let (gi, ni) = (g as i64, n as i64);
            ensure(-4 * gi + (1 - ni) - 4 == -(4 * gi + ni + 3), || "identity".into())?;
            ensure(c.surface.euler_blowup == -(4 * gi + ni + 3), || format!("g {g} n {n}: χ {}", c.surface.euler_blowup))?;
            ensure(c.surface.genus == 1, || format!("g {g} n {n}: genus {}", c.surface.genus))?;
        }
    }
    Ok("χ −19, 19 circles, genus 1; identity for g, n ≤ 10".into())
}

fn c9_ghys_bound() -> Check {
    let rl: RLWord = "RL".parse().unwrap();
    let mut n = 0;
    for w in mixed_up_to(8) {
        let rw_word = w.prepend(ghys_core::sl2z::Letter::R);
        let b = ghys_distance_upper_bound(&w, &rw_word, 1).map_err(|e| format!("{w}: {e}"))?;
        ensure(matches!(b, GhysBound::Bound(0) | GhysBound::Bound(3)), || format!("{w} vs R{w}: {b}"))?;
        let radius = (w.len() - 2) as u32;
        let chain = descent_chain(&w).map_err(|e| format!("{w}: {e}"))?;
        let to_rl = ghys_distance_upper_bound(&w, &rl, radius).map_err(|e| format!("{w}: {e}"))?;
        let limit = 3 * (w.len() as u64 - 2);
        ensure(chain.bound() == limit, || format!("{w}: descent bound {}", chain.bound()))?;
        ensure(matches!(to_rl, GhysBound::Bound(v) if v <= limit), || format!("{w} vs RL: {to_rl}, limit {limit}"))?;
        n += 1;
    }
    Ok(format!("{n} words"))
}

fn c10_lefschetz_audit() -> Check {
    let mut summary = Vec::new();
    for s in ["RL", "RRL", "RLRL", "RRLL"] {
        let w: RLWord = s.parse().unwrap();
        let t = lefschetz_audit(&w, 6).map_err(|e| format!("{s}: {e}"))?;
        for r in &t.rows {
            ensure(r.residual >= BigInt::from(0) && r.residual <= BigInt::from(t.circle_count), || {
                format!("{s}: residual({}) = {} outside [0, {}]", r.m, r.residual, t.circle_count)
            })?;
            ensure(r.lhs == word_to_matrix(&w).pow(r.m).trace() - 2, || format!("{s}: lhs({})", r.m))?;
        }
        ensure(t.consistent, || format!("{s}: no single period assignment, fitted {:?}", t.fitted_periods))?;
        let fitted: Vec<String> = t.fitted_periods.iter().map(|(p, c)| format!("{c}x{p}")).collect();
        summary.push(format!("{s} [{}]", fitted.join(" ")));
    }
    Ok(summary.join(", "))
}

fn c11_hyperbolicity_probe() -> Check {
    let params = ExploreParams::default();
    let center = GraphNode::word(&"RL".parse().unwrap(), params.group).unwrap();
    let mut last = Rational64::from(0);
    let mut trees = 0;
    let mut deltas = Vec::new();
    for r in 0..=4 {
        let ball = explore_ball(&center, r, &params).map_err(|e| format!("radius {r}: {e}"))?;
        let d = delta_hyperbolicity(&ball, 0).map_err(|e| format!("radius {r}: {e}"))?.delta;
        ensure(d >= Rational64::from(0), || format!("radius {r}: δ = {d}"))?;
        if ball.edge_count() + 1 == ball.len() {
            trees += 1;
            ensure(d == Rational64::from(0), || format!("radius {r}: tree ball with δ = {d}"))?;
        }
        ensure(d >= last, || format!("radius {r}: δ drops from {last} to {d}"))?;
        last = d;
        deltas.push(d.to_string());
        if r == 4 {
            let profile = delta_profile(&ball).map_err(|e| e.to_string())?;
            for pair in profile.windows(2) {
                ensure(pair[0].delta <= pair[1].delta, || "nested-core profile not monotone".into())?;
            }
        }
    }
    Ok(format!("δ by radius [{}], {trees} tree balls", deltas.join(", ")))
}

fn c12_stable_tangency() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut n = 0;
    while n < 100 {
        let len = rng.gen_range(3..=10);
        let s: String = (0..len).map(|_| if rng.gen_bool(0.5) { 'R' } else { 'L' }).collect();
        let w: RLWord = s.parse().unwrap();
        if !w.is_mixed() || degenerate_by_spelling(&w) {
            continue;
        }
        let c = stable_tangency_count(&w).map_err(|e| format!("{w}: {e}"))?;
        ensure(c == 2, || format!("{w}: {c} tangencies"))?;
        n += 1;
    }
    Ok(format!("{n} sampled generic words"))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 12] = [
        ("1 RL matrix", Duration::from_millis(1000), c1_rl_matrix),
        ("2 factorization round trip", Duration::from_secs(10), c2_factorization_round_trip),
        ("3 fixed points of RW", Duration::from_secs(30), c3_fixed_points),
        ("4 embedding dichotomy", Duration::MAX, c4_embedding),
        ("5 section numbers", Duration::MAX, c5_section_numbers),
        ("6 first-return identity", Duration::MAX, c6_first_return),
        ("7 descent", Duration::from_secs(10), c7_descent),
        ("8 orbifold census", Duration::MAX, c8_orbifold_census),
        ("9 Ghys bound", Duration::MAX, c9_ghys_bound),
        ("10 Lefschetz audit", Duration::from_secs(60), c10_lefschetz_audit),
        ("11 hyperbolicity probe", Duration::from_secs(120), c11_hyperbolicity_probe),
        ("12 stable tangencies", Duration::MAX, c12_stable_tangency),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(note) if took > limit => Err(format!("{note}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(note) => println!("PASS  {name:<28} {took:>10.2?}  {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<28} {took:>10.2?}  {why}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
