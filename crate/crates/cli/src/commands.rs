use std::io::Read;

use frustra_core::spectrum::{restricted_spectra, spectrum_recursive};
use frustra_core::{
    bipartite_distance, classify_f, clique_plus_matching, complete_bipartite, counterexample_pair,
    enumerate_full, extremal_for_edges, f_degree_formula, f_pair_formula, f_scan, interval_table,
    matching, parity_of_f, star, switching_equivalent, t_exact, thm2_family, verify_structure,
    verify_thm1_structure, verify_thm2_family, verify_thm3, EnumerationOptions, Graph, Parity,
    Thm2Params,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Check, Command, ConstructArgs, GraphArg, Kind, RunArgs, SpectrumMethod};
use crate::{Failure, Report, EXIT_PARSE, EXIT_USAGE};

type Outcome = Result<Report, Failure>;

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn parse_graph(text: &str) -> Result<Graph, Failure> {
    text.trim().parse::<Graph>().map_err(|err| Failure {
        code: EXIT_PARSE,
        message: format!("cannot parse graph {:?}: {err}", text.trim()),
    })
}

fn read_graph(arg: &GraphArg) -> Result<(String, Graph), Failure> {
    let text = match arg.graph.as_deref() {
        Some(s) if s != "-" => s.to_string(),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|err| usage(format!("reading stdin: {err}")))?;
            buf.lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| usage("no graph given and stdin is empty"))?
                .to_string()
        }
    };
    let g = parse_graph(&text)?;
    Ok((text.trim().to_string(), g))
}

fn options(run: &RunArgs) -> EnumerationOptions {
    EnumerationOptions {
        threads: run.threads,
        allow_large: run.allow_large,
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "e": g.edge_count(),
        "f": f_scan(g).get(),
        "graph6": g.to_graph6().ok(),
        "edges": g.edges(),
    })
}

pub(crate) fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Count(arg) => count(&arg),
        Command::Classify { n, f } => classify(n, f),
        Command::Tg(arg) => tg(&arg),
        Command::Equiv { g, h } => equiv(&g, &h),
        Command::Spectrum { n, method, run, csv } => spectrum(n, method, &run, csv),
        Command::Verify {
            check,
            n,
            run,
            v1_steps,
        } => verify(check, n, &run, v1_steps),
        Command::Restricted { t, n, to } => restricted(t, n, to),
        Command::Construct(args) => construct(&args),
        Command::Table { n, csv } => table(n, csv),
    }
}

fn count(arg: &GraphArg) -> Outcome {
    let (text, g) = read_graph(arg)?;
    let scan = f_scan(&g).get();
    let degree = f_degree_formula(&g).get();
    let pair = f_pair_formula(&g).get();
    let profile = g.structure_profile();
    let parity_ok = Parity::of(scan) == parity_of_f(g.n(), profile.e);
    let mut failures = Vec::new();
    if scan != degree || scan != pair {
        failures.push(format!(
            "counts disagree: scan {scan}, degree formula {degree}, pair formula {pair}"
        ));
    }
    if !parity_ok {
        failures.push(format!("f = {scan} has the wrong parity for n = {}, e = {}", g.n(), profile.e));
    }
    Ok(Report {
        command: "count",
        inputs: json!({ "graph": text }),
        results: json!({
            "f": scan,
            "f_scan": scan,
            "f_degree_formula": degree,
            "f_pair_formula": pair,
            "n": profile.n,
            "e": profile.e,
            "p": profile.p,
            "q": profile.q,
            "degrees": profile.degrees,
            "parity_ok": parity_ok,
        }),
        failures,
        summary: format!("f = {scan} (n = {}, e = {})", g.n(), profile.e),
        raw: None,
    })
}

fn classify(n: u64, f: u64) -> Outcome {
    let c = classify_f(n, f)?;
    Ok(Report {
        command: "classify",
        inputs: json!({ "n": n, "f": f }),
        results: to_value(&c),
        failures: Vec::new(),
        summary: format!("{f} on {n} vertices: {:?}, mirror {:?}", c.band, c.complement),
        raw: None,
    })
}

fn tg(arg: &GraphArg) -> Outcome {
    let (text, g) = read_graph(arg)?;
    let t = t_exact(&g)?;
    let f = f_scan(&g).get();
    Ok(Report {
        command: "tg",
        inputs: json!({ "graph": text }),
        results: json!({
            "t": t.t,
            "bipartition": t.argmin.vertices(),
            "f": f,
            "n": g.n(),
        }),
        failures: Vec::new(),
        summary: format!("t_G = {} with X = {:?}", t.t, t.argmin.vertices()),
        raw: None,
    })
}

fn equiv(g_text: &str, h_text: &str) -> Outcome {
    let g = parse_graph(g_text)?;
    let h = parse_graph(h_text)?;
    let witness = switching_equivalent(&g, &h)?;
    let (results, summary) = match &witness {
        Some(w) => (
            json!({
                "equivalent": true,
                "flip": w.flip.vertices(),
                "sigma": w.sigma,
            }),
            format!("equivalent: flip {:?}, then relabel by {:?}", w.flip.vertices(), w.sigma),
        ),
        None => (
            json!({ "equivalent": false, "message": "not equivalent" }),
            "not equivalent".to_string(),
        ),
    };
    Ok(Report {
        command: "equiv",
        inputs: json!({ "g": g_text.trim(), "h": h_text.trim() }),
        results,
        failures: Vec::new(),
        summary,
        raw: None,
    })
}

fn spectrum(n: usize, method: SpectrumMethod, run: &RunArgs, csv: bool) -> Outcome {
    let opts = options(run);
    let result = match method {
        SpectrumMethod::Brute => enumerate_full(n, &opts)?,
        SpectrumMethod::Recursion => spectrum_recursive(n, &opts)?,
    };
    let method_name = match method {
        SpectrumMethod::Brute => "brute",
        SpectrumMethod::Recursion => "recursion",
    };
    Ok(Report {
        command: "spectrum",
        inputs: json!({ "n": n, "method": method_name, "allow_large": run.allow_large }),
        results: to_value(&result),
        failures: Vec::new(),
        summary: format!("|F_{n}| = {}", result.values.len()),
        raw: csv.then(|| result.to_csv()),
    })
}

fn verify(check: Check, n: usize, run: &RunArgs, v1_steps: usize) -> Outcome {
    let opts = options(run);
    let (name, results, failures) = match check {
        Check::Gaps | Check::Parity | Check::Symmetry => {
            let r = verify_structure(n, &opts)?;
            let (name, failures) = match check {
                Check::Gaps => ("gaps", r.failures.clone()),
                Check::Parity if !r.parity => ("parity", vec!["an (f, e) pair breaks the parity rule".into()]),
                Check::Symmetry if !r.symmetry => {
                    ("symmetry", vec!["F_n is not symmetric about C(n,3)/2".into()])
                }
                Check::Parity => ("parity", Vec::new()),
                _ => ("symmetry", Vec::new()),
            };
            (name, to_value(&r), failures)
        }
        Check::Thm1 => {
            let r = verify_thm1_structure(n, &opts)?;
            let mut failures = r.failures.clone();
            if r.failure_count as usize > failures.len() {
                failures.push(format!("{} failures in total", r.failure_count));
            }
            ("thm1", to_value(&r), failures)
        }
        Check::Thm3 => {
            let r = verify_thm3(n, &opts)?;
            ("thm3", to_value(&r), r.failures.clone())
        }
        Check::Thm2 => {
            let r = verify_thm2_family(n, v1_steps);
            ("thm2", to_value(&r), r.failures.clone())
        }
    };
    let mut inputs = json!({ "check": name, "n": n });
    if check == Check::Thm2 {
        inputs["v1_steps"] = json!(v1_steps);
    } else {
        inputs["allow_large"] = json!(run.allow_large);
    }
    let summary = if failures.is_empty() {
        format!("{name} at n = {n}: pass")
    } else {
        format!("{name} at n = {n}: {} failure(s)", failures.len())
    };
    Ok(Report {
        command: "verify",
        inputs,
        results,
        failures,
        summary,
        raw: None,
    })
}

fn restricted(t: u64, n: u64, to: Option<u64>) -> Outcome {
    let last = to.unwrap_or(n);
    if last < n {
        return Err(usage(format!("--to {last} is below -n {n}")));
    }
    let spectra = restricted_spectra(n..=last, t)?;
    let mut inputs = json!({ "t": t, "n": n });
    if let Some(to) = to {
        inputs["to"] = json!(to);
    }
    let summary = spectra
        .iter()
        .map(|s| format!("n = {}: missing {:?}", s.n, s.missing))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report {
        command: "restricted",
        inputs,
        results: json!({ "spectra": spectra }),
        failures: Vec::new(),
        summary,
        raw: None,
    })
}

fn need<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("--kind {kind} needs {flag}")))
}

fn construct(args: &ConstructArgs) -> Outcome {
    let mut inputs = json!({ "kind": format!("{:?}", args.kind).to_lowercase() });
    let graphs: Vec<Graph> = match args.kind {
        Kind::Star => {
            let (n, t) = (need(args.n, "-n", "star")?, need(args.t, "-t", "star")?);
            inputs["n"] = json!(n);
            inputs["t"] = json!(t);
            vec![star(n, t)?]
        }
        Kind::Matching => {
            let (n, t) = (need(args.n, "-n", "matching")?, need(args.t, "-t", "matching")?);
            inputs["n"] = json!(n);
            inputs["t"] = json!(t);
            vec![matching(n, t)?]
        }
        Kind::Kbip => {
            let (n, x) = (need(args.n, "-n", "kbip")?, need(args.x, "-x", "kbip")?);
            inputs["n"] = json!(n);
            inputs["x"] = json!(x);
            vec![complete_bipartite(n, x)?]
        }
        Kind::CliqueMatching => {
            let n = need(args.n, "-n", "clique-matching")?;
            let r = need(args.r, "-r", "clique-matching")?;
            let m = need(args.m, "-m", "clique-matching")?;
            inputs["n"] = json!(n);
            inputs["r"] = json!(r);
            inputs["m"] = json!(m);
            vec![clique_plus_matching(n, r, m)?]
        }
        Kind::Extremal => {
            let (n, e) = (need(args.n, "-n", "extremal")?, need(args.e, "-e", "extremal")?);
            inputs["n"] = json!(n);
            inputs["e"] = json!(e);
            extremal_for_edges(n, e)?
        }
        Kind::Thm2 => {
            let n = need(args.n, "-n", "thm2")?;
            inputs["n"] = json!(n);
            let base = Thm2Params::for_order(n)?;
            let params = match &args.state {
                None => base,
                Some(s) if s.len() == 4 => {
                    inputs["state"] = json!(s);
                    base.with_state(s[0], s[1], s[2], s[3])?
                }
                Some(s) => return Err(usage(format!("--state takes i,j,k,l; got {} values", s.len()))),
            };
            inputs["params"] = to_value(&params);
            vec![thm2_family(&params)?]
        }
        Kind::Counterexample => {
            let (g, h) = counterexample_pair();
            vec![g, h]
        }
    };
    let encoded: Vec<String> = graphs
        .iter()
        .map(|g| g.to_graph6())
        .collect::<Result<_, _>>()?;
    let plain = encoded.iter().map(|s| format!("{s}\n")).collect::<String>();
    Ok(Report {
        command: "construct",
        inputs,
        results: json!({
            "graph6": encoded,
            "graphs": graphs.iter().map(graph_json).collect::<Vec<_>>(),
        }),
        failures: Vec::new(),
        summary: format!("{} graph(s)", graphs.len()),
        raw: args.plain.then_some(plain),
    })
}

fn table(n: u64, csv: bool) -> Outcome {
    let intervals = interval_table(n)?;
    let distance = bipartite_distance(n);
    let raw = csv.then(|| format!("{}\n{}", intervals.to_csv(), distance.to_csv()));
    Ok(Report {
        command: "table",
        inputs: json!({ "n": n }),
        results: json!({ "intervals": intervals, "distance": distance }),
        failures: Vec::new(),
        summary: format!("t_max = {}, threshold a_(t_max+1) = {}", intervals.t_max, intervals.threshold),
        raw,
    })
}
