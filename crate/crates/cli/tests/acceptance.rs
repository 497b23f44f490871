//! Acceptance gate: one line per criterion, every tolerance pinned.
//!
//! All comparisons are exact. Time budgets are wall-clock limits for the whole
//! criterion. A criterion listed in `UNATTAINABLE` is still run in full and
//! still prints FAIL; the gate only refuses to go red for it, and goes red if
//! it ever starts passing so the list gets revisited.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use frustra_core::spectrum::{colex_pairs, restricted_spectra, GrayWalk, THM2_DEFAULT_V1_STEPS};
use frustra_core::{
    counterexample_pair, enumerate_full, f_degree_formula, f_pair_formula, f_scan, pair_set,
    spectrum_by_recursion, switching_equivalent, verify_structure, verify_thm1_structure,
    verify_thm2_family, verify_thm3, EnumerationOptions, Graph,
};

/// Criteria that cannot hold as stated, with the reason printed next to them.
const UNATTAINABLE: &[(u32, &str)] = &[(
    8,
    "odd n = 37 gives s1 = ceil(sqrt(74)) = 9, s2 = ceil(296^(1/4)) = 5 and r = 37 - 18 - 20 = -1, \
     so the four-part family does not exist at that order",
)];

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn serial() -> EnumerationOptions {
    EnumerationOptions::default()
}

fn timed(id: u32, budget: Duration, check: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = check();
    let elapsed = start.elapsed();
    Outcome {
        id,
        pass: pass && elapsed <= budget,
        detail: if elapsed <= budget {
            detail
        } else {
            format!("{detail}; over time budget")
        },
        elapsed,
        budget,
    }
}

fn c1_oracles() -> (bool, String) {
    let mut graphs = 0u64;
    let mut mismatches = 0u64;
    for n in 3..=6 {
        GrayWalk::all_graphs(n).unwrap().for_each(|rows, walk_f, _| {
            let g = Graph::from_rows(n, rows).unwrap();
            let scan = f_scan(&g).get();
            let degree = f_degree_formula(&g).get();
            let pair = f_pair_formula(&g).get();
            graphs += 1;
            if scan != degree || scan != pair || scan != walk_f {
                mismatches += 1;
            }
        });
    }
    (
        mismatches == 0 && graphs == 8 + 64 + 1024 + 32768,
        format!("{graphs} labeled graphs n = 3..6, {mismatches} disagreements"),
    )
}

fn c2_gaps() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 3..=7 {
        let r = verify_structure(n, &serial()).unwrap();
        let gaps_empty = r.gaps_checked.iter().all(|g| g.empty);
        ok &= gaps_empty && r.progression;
        notes.push(format!("n={n}: {} gaps empty={gaps_empty} progression={}", r.gaps_checked.len(), r.progression));
    }
    (ok, notes.join(", "))
}

fn c3_characterization() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [6, 7] {
        let r = verify_thm1_structure(n, &serial()).unwrap();
        ok &= r.passed();
        notes.push(format!(
            "n={n}: {} graphs, {} below a_(t_max+1) = {}, {} violations",
            r.graphs_checked, r.below_threshold, r.threshold, r.failure_count
        ));
    }
    (ok, notes.join("; "))
}

fn c4_min_positive() -> (bool, String) {
    let mut found = Vec::new();
    let mut ok = true;
    for n in 3..=8usize {
        let opts = EnumerationOptions {
            threads: 1,
            allow_large: n == 8,
        };
        let r = enumerate_full(n, &opts).unwrap();
        let min = r.values.iter().copied().find(|&f| f > 0);
        ok &= min == Some(n as u64 - 2);
        found.push(format!("n={n}: {}", min.map_or("none".into(), |m| m.to_string())));
    }
    (ok, format!("min(F_n minus 0): {}", found.join(", ")))
}

fn c5_extremal() -> (bool, String) {
    let r = verify_thm3(7, &serial()).unwrap();
    let minimizers: u64 = r.min_side.iter().map(|row| row.minimizers).sum();
    let ok = r.passed()
        && r.min_side.len() == 15
        && r.min_side.iter().all(|row| {
            row.observed_min == row.bound && row.minimizers_equivalent && row.extremal_attains
        })
        && r.max_side.iter().all(|row| row.observed_max == row.bound && row.complement_attains);
    (
        ok,
        format!(
            "n=7, e = 0..14: {minimizers} minimizers all switching equivalent to the g(e)-star; max side e = {}..21",
            r.max_side.first().map_or(0, |m| m.e)
        ),
    )
}

fn c6_restricted() -> (bool, String) {
    let spectra = restricted_spectra(8..=64, 4).unwrap();
    let matches: Vec<u64> = spectra
        .iter()
        .filter(|s| s.missing == vec![4 * (s.n - 5) + 2])
        .map(|s| s.n)
        .collect();
    let required: BTreeSet<u64> = (23..=30).collect();
    let ok = required.iter().all(|n| matches.contains(n));
    let lo = matches.first().copied().unwrap_or(0);
    let hi = matches.last().copied().unwrap_or(0);
    let contiguous = matches.len() as u64 == hi - lo + 1;
    (
        ok,
        format!(
            "missing set = {{a_4 + 2}} for n in {lo}..={hi} (contiguous: {contiguous}) of 8..=64 examined"
        ),
    )
}

fn c7_counterexample() -> (bool, String) {
    let (g, h) = counterexample_pair();
    let (fg, fh) = (f_scan(&g).get(), f_scan(&h).get());
    let equivalent = switching_equivalent(&g, &h).unwrap().is_some();
    (
        fg == 12 && fh == 12 && !equivalent,
        format!("f = {fg} and {fh}, switching equivalent: {equivalent}"),
    )
}

fn c8_four_part_family() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [36, 37] {
        let r = verify_thm2_family(n, THM2_DEFAULT_V1_STEPS);
        ok &= r.passed();
        if r.passed() {
            notes.push(format!(
                "n={n}: {} clique steps, {} star and {} path steps, {} pairs tiled",
                r.v1_steps_checked, r.star_steps_checked, r.path_steps_checked, r.pairs_tiled
            ));
        } else {
            notes.push(format!("n={n}: {}", r.failures.join("; ")));
        }
    }
    (ok, notes.join("; "))
}

fn c9_cross_method() -> (bool, String) {
    let mut ok = true;
    for n in 4..=7 {
        let full = enumerate_full(n, &serial()).unwrap();
        let prev = pair_set(n - 1, &serial()).unwrap();
        let rec: Vec<u64> = spectrum_by_recursion(&prev).into_iter().collect();
        ok &= rec == full.values;
    }
    (ok, "recursion from P_(n-1) equals enumeration for n = 4..7".into())
}

fn c10_determinism() -> (bool, String) {
    let commands: &[&[&str]] = &[
        &["spectrum", "-n", "7"],
        &["spectrum", "-n", "7", "--method", "recursion"],
        &["verify", "--check", "gaps", "-n", "7"],
        &["verify", "--check", "thm1", "-n", "6"],
        &["verify", "--check", "thm3", "-n", "6"],
        &["verify", "--check", "thm2", "-n", "36"],
    ];
    let mut ok = true;
    for cmd in commands {
        let outputs: Vec<String> = ["1", "4", "8"]
            .iter()
            .map(|k| {
                let mut argv = vec!["frustra"];
                argv.extend_from_slice(cmd);
                argv.extend_from_slice(&["--threads", k]);
                let out = frustra_cli::run(argv);
                format!("{}\n{}", out.code, out.stdout)
            })
            .collect();
        ok &= outputs.windows(2).all(|w| w[0] == w[1]) && outputs[0].starts_with("0\n");
    }
    (
        ok,
        format!("{} commands byte-identical across --threads 1, 4, 8", commands.len()),
    )
}

fn main() {
    // Sanity: the pair order used by the walks.
    assert_eq!(colex_pairs(3), vec![(0, 1), (0, 2), (1, 2)]);

    let secs = Duration::from_secs;
    let outcomes = vec![
        timed(1, secs(10), c1_oracles),
        timed(2, secs(60), c2_gaps),
        timed(3, secs(15 * 60), c3_characterization),
        timed(4, secs(15 * 60), c4_min_positive),
        timed(5, secs(15 * 60), c5_extremal),
        timed(6, secs(5), c6_restricted),
        timed(7, secs(1), c7_counterexample),
        timed(8, secs(120), c8_four_part_family),
        timed(9, secs(15 * 60), c9_cross_method),
        timed(10, secs(15 * 60), c10_determinism),
    ];

    let mut unexpected = Vec::new();
    for o in &outcomes {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}: {verdict} | {} | {:.2}s of {}s",
            o.id,
            o.detail,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs()
        );
        let known = UNATTAINABLE.iter().find(|(id, _)| *id == o.id);
        match (o.pass, known) {
            (false, Some((_, why))) => println!("              known unattainable: {why}"),
            (false, None) => unexpected.push(format!("criterion {} failed", o.id)),
            (true, Some(_)) => unexpected.push(format!("criterion {} listed unattainable but passed", o.id)),
            (true, None) => {}
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed}/{} criteria pass", outcomes.len());
    if !unexpected.is_empty() {
        eprintln!("{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
