use std::fs;
use std::path::Path;
use std::time::Instant;

use gin_core::complexes::classify::forbidden_hit;
use gin_core::complexes::complex::{combinatorial_ideal, Source};
use gin_core::complexes::{base_form, condition_vi, is_chordal, is_near_cone, shifted_complex, Graph, SimplicialComplex};
use gin_core::field::BinaryField;
use gin_core::gin::duality::duality_report;
use gin_core::gin::{combinatorial_shift, gin, trans_witnesses, GinOptions};
use gin_core::invariants::closed_form::{max_ge_profile, min_ge_profile, two_cliques_profile_from_h};
use gin_core::invariants::{
    betti_stable, closed_form_profiles, index_profile, lex_rev_complement_identity, resolution_oracle, shifted_graph,
    BettiFlavor,
};
use gin_core::invariants::betti::ORACLE_MAX_GENERATORS;
use gin_core::verifier::properties::{PropertyOptions, HYPERPLANE_SAMPLES, PARTIAL_SUPPORT_SAMPLES};
use gin_core::verifier::{property_suite, sweep_theorem1, sweep_theorem2};
use gin_core::{Error, Field, Monomial, MonomialIdeal, MonomialSet, Result, Ring, TermOrder};
use serde_json::json;

use crate::{Cli, Command, Outcome, Theorem};

enum Input {
    Ideal(MonomialIdeal),
    Graph(Graph),
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

/// Ideal files start with a `ring=... n=...` header; anything else is read as a graph.
fn load(path: &Path) -> Result<Input> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with("ring=") {
        Ok(Input::Ideal(MonomialIdeal::parse_file(&text)?))
    } else {
        Ok(Input::Graph(Graph::parse(&text)?))
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    match load(path)? {
        Input::Graph(g) => Ok(g),
        Input::Ideal(_) => Err(Error::invalid(format!("{} is an ideal file, expected a graph", path.display()))),
    }
}

fn ring(cli: &Cli) -> Result<Option<Ring>> {
    cli.ring.as_deref().map(str::parse).transpose()
}

/// The ideal of an ideal file, or `J_G` / `I(G)` of a graph file depending on `--ring`.
fn load_ideal(cli: &Cli, path: &Path) -> Result<MonomialIdeal> {
    let want = ring(cli)?;
    match load(path)? {
        Input::Ideal(i) => match want {
            Some(r) if r != i.ring() => Err(Error::invalid(format!("--ring {r} but the file holds a {} ideal", i.ring()))),
            _ => Ok(i),
        },
        Input::Graph(g) => Ok(combinatorial_ideal(Source::Graph(&g), want.unwrap_or(Ring::Exterior))),
    }
}

fn order(cli: &Cli) -> Result<TermOrder> {
    cli.order.parse()
}

fn options(cli: &Cli) -> GinOptions {
    GinOptions { trials: cli.trials, seed: cli.seed, degree_cap: cli.degree_cap, ..GinOptions::default() }
}

fn default_cap(cli: &Cli, ideal: &MonomialIdeal) -> usize {
    cli.degree_cap.unwrap_or(match ideal.ring() {
        Ring::Exterior => ideal.n(),
        Ring::Polynomial => ideal.max_generator_degree().map_or(1, |d| d + 1),
    })
}

fn parse_list(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad integer {x:?} in {s:?}"))))
                .collect()
        })
        .collect()
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    parse_list(s)?
        .into_iter()
        .map(|p| match p[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::invalid(format!("shift pairs look like `1,3;2,4`, got {s:?}"))),
        })
        .collect()
}

fn lines(ideal: &MonomialIdeal) -> String {
    ideal.generator_strings().join(" ")
}

pub fn dispatch<F: Field>(f: &F, cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gin { file } => gin_cmd(f, cli, file),
        Command::Shift { file, pairs } => shift_cmd(f, cli, file, pairs),
        Command::Witnesses { file, budget } => witnesses_cmd(f, cli, file, *budget),
        Command::Classify { file } => classify_cmd(cli, file),
        Command::Profile { file, closed } => profile_cmd(f, cli, file.as_deref(), closed.as_deref()),
        Command::Betti { file, no_gin } => betti_cmd(f, cli, file, *no_gin),
        Command::ShiftedComplex { file, facets, n } => shifted_complex_cmd(f, cli, file.as_deref(), facets.as_deref(), *n),
        Command::Sweep { theorem, n } => sweep_cmd(f, cli, *theorem, *n),
        Command::Properties { samples } => properties_cmd(f, cli, *samples),
        Command::NegativeTest => negative_test(cli),
    }
}

fn gin_cmd<F: Field>(f: &F, cli: &Cli, file: &Path) -> Result<Outcome> {
    let ideal = load_ideal(cli, file)?;
    let o = order(cli)?;
    let r = gin(f, &o, &ideal, &options(cli))?;
    let table = format!(
        "input  {}\ngin    {}\norder {}  field {}  seed {}  cap {}  trials {}  accepted {}\n",
        lines(&ideal),
        lines(&r.ideal),
        o,
        f.describe(),
        cli.seed,
        r.certificate.degree_cap,
        r.certificate.trials,
        r.certificate.accepted
    );
    Ok(Outcome {
        json: json!({
            "command": "gin",
            "seed": cli.seed,
            "input": ideal,
            "gin": r.ideal,
            "certificate": r.certificate,
        }),
        table,
        pass: true,
    })
}

fn shift_cmd<F: Field>(f: &F, cli: &Cli, file: &Path, pairs: &str) -> Result<Outcome> {
    let ideal = load_ideal(cli, file)?;
    let o = order(cli)?;
    let pairs = parse_pairs(pairs)?;
    let cap = default_cap(cli, &ideal);
    let r = combinatorial_shift(f, &o, &ideal, &pairs, cap)?;
    let stable = r.is_strongly_stable();
    Ok(Outcome {
        table: format!("{}\nstrongly stable: {stable}\n", lines(&r)),
        json: json!({
            "command": "shift",
            "seed": cli.seed,
            "order": o,
            "pairs": pairs,
            "degree_cap": cap,
            "input": ideal,
            "result": r,
            "strongly_stable": stable,
        }),
        pass: true,
    })
}

fn witnesses_cmd<F: Field>(f: &F, cli: &Cli, file: &Path, budget: usize) -> Result<Outcome> {
    let ideal = load_ideal(cli, file)?;
    let o = order(cli)?;
    let cap = default_cap(cli, &ideal);
    let s = trans_witnesses(f, &o, &ideal, budget, cap)?;
    let mut table = String::new();
    for w in &s.witnesses {
        table.push_str(&format!("{:<40} via {:?}\n", lines(&w.ideal), w.pairs));
    }
    table.push_str(&format!("{} witnesses, {} shifts{}\n", s.witnesses.len(), s.steps, if s.truncated { ", budget reached" } else { "" }));
    Ok(Outcome {
        json: json!({
            "command": "witnesses",
            "seed": cli.seed,
            "order": o,
            "degree_cap": cap,
            "budget": budget,
            "input": ideal,
            "search": s,
            "distinct_in_degree_2": s.distinct_in_degree(2).is_some(),
        }),
        table,
        pass: true,
    })
}

fn classify_cmd(cli: &Cli, file: &Path) -> Result<Outcome> {
    let g = load_graph(file)?;
    let hit = forbidden_hit(&g);
    let peel = condition_vi(&g);
    let base = base_form(&g);
    let cones: Vec<usize> = (1..=g.n()).filter(|&v| is_near_cone(&g, v)).collect();
    let chordal = is_chordal(&g);
    let v = hit.is_none();
    let table = format!(
        "graph {g}\ncondition (v): {v}{}\ncondition (vi): {} peel {:?} base {}\nbase form: {base}\nnear cone at: {cones:?}\nchordal: {chordal}\n",
        hit.as_ref().map(|h| format!("  ({h})")).unwrap_or_default(),
        peel.holds,
        peel.peel,
        peel.base,
    );
    Ok(Outcome {
        json: json!({
            "command": "classify",
            "seed": cli.seed,
            "graph": g,
            "condition_v": v,
            "witness": hit.as_ref().map(|h| h.to_string()),
            "condition_vi": peel.holds,
            "peel": peel.peel,
            "base_form": base,
            "near_cone_vertices": cones,
            "chordal": chordal,
        }),
        table,
        pass: v == peel.holds,
    })
}

fn profile_cmd<F: Field>(f: &F, cli: &Cli, file: Option<&Path>, closed: Option<&str>) -> Result<Outcome> {
    let opts = options(cli);
    match (file, closed) {
        (None, Some(ab)) => {
            let [a, b] = parse_list(ab)?.concat()[..] else {
                return Err(Error::invalid("--closed takes `a,b`"));
            };
            if a == 0 || b == 0 {
                return Err(Error::invalid("--closed needs positive part sizes"));
            }
            let cf = closed_form_profiles(a, b);
            let (bip, _) = shifted_graph(f, &TermOrder::RevLex, &Graph::complete_bipartite(a, b), &opts)?;
            let (cliques, _) = shifted_graph(f, &TermOrder::RevLex, &Graph::two_cliques(a, b), &opts)?;
            let engine_bip = max_ge_profile(&bip);
            let engine_cliques = min_ge_profile(&cliques);
            let from_h = two_cliques_profile_from_h(a, b);
            let pass = engine_bip == cf.bipartite && engine_cliques == cf.two_cliques && from_h == cf.two_cliques;
            let table = format!(
                "K_{{{a},{b}}}  closed {:?}  engine {engine_bip:?}\nK_{a} u K_{b}  closed {:?}  engine {engine_cliques:?}  h-sum {from_h:?}\n{}\n",
                cf.bipartite,
                cf.two_cliques,
                if pass { "PASS" } else { "FAIL" }
            );
            Ok(Outcome {
                json: json!({
                    "command": "profile",
                    "seed": cli.seed,
                    "closed_form": cf,
                    "engine_bipartite": engine_bip,
                    "engine_two_cliques": engine_cliques,
                    "h_sum": from_h,
                    "pass": pass,
                }),
                table,
                pass,
            })
        }
        (Some(path), None) => {
            let g = load_graph(path)?;
            let o = order(cli)?;
            let (shifted, cert) = shifted_graph(f, &o, &g, &opts)?;
            let j = gin(f, &o, &gin_core::complexes::graph_face_ideal(&g), &GinOptions { degree_cap: Some(2.min(g.n())), ..opts.clone() })?;
            let idx = index_profile(&j.ideal, 2);
            let ident = lex_rev_complement_identity(f, &g, &opts)?;
            let table = format!(
                "graph {g}\nshifted {shifted}\nmax>=n+1-k {:?}\nmin>=n+1-k {:?}\ngin min<=k {:?}\ngin max<=k {:?}\nlex/revlex complement relation: {}\n",
                max_ge_profile(&shifted),
                min_ge_profile(&shifted),
                idx.min_le,
                idx.max_le,
                ident.holds
            );
            Ok(Outcome {
                json: json!({
                    "command": "profile",
                    "seed": cli.seed,
                    "order": o,
                    "graph": g,
                    "shifted_graph": shifted,
                    "max_ge": max_ge_profile(&shifted),
                    "min_ge": min_ge_profile(&shifted),
                    "gin_index_profile": idx,
                    "complement_identity": ident,
                    "certificate": cert,
                }),
                table,
                pass: ident.holds,
            })
        }
        _ => Err(Error::invalid("profile takes either a graph file or --closed a,b")),
    }
}

fn betti_cmd<F: Field>(f: &F, cli: &Cli, file: &Path, no_gin: bool) -> Result<Outcome> {
    let input = load_ideal(cli, file)?;
    let (ideal, cert) = if no_gin {
        (input.clone(), None)
    } else {
        let r = gin(f, &order(cli)?, &input, &options(cli))?;
        (r.ideal, Some(r.certificate))
    };
    let flavor = if ideal.ring() == Ring::Exterior || (ideal.is_squarefree() && !ideal.is_strongly_stable()) {
        BettiFlavor::SquarefreeStronglyStable
    } else {
        BettiFlavor::StronglyStable
    };
    let formula = betti_stable(&ideal, flavor)?;
    let oracle = if ideal.generators().len() <= ORACLE_MAX_GENERATORS { Some(resolution_oracle(&ideal)?) } else { None };
    let pass = oracle.as_ref().is_none_or(|o| *o == formula);
    let mut table = format!("ideal {}\n{}", lines(&ideal), formula.render());
    match &oracle {
        Some(_) => table.push_str(&format!("resolution oracle agrees: {pass}\n")),
        None => table.push_str("resolution oracle skipped (too many generators)\n"),
    }
    Ok(Outcome {
        json: json!({
            "command": "betti",
            "seed": cli.seed,
            "ideal": ideal,
            "flavor": flavor,
            "formula": formula,
            "oracle": oracle,
            "regularity": formula.regularity(),
            "certificate": cert,
            "pass": pass,
        }),
        table,
        pass,
    })
}

fn shifted_complex_cmd<F: Field>(
    f: &F,
    cli: &Cli,
    file: Option<&Path>,
    facets: Option<&str>,
    n: Option<usize>,
) -> Result<Outcome> {
    let c = match (file, facets) {
        (Some(p), None) => SimplicialComplex::flag(&load_graph(p)?),
        (None, Some(fs)) => {
            let fs = parse_list(fs)?;
            let n = n.or_else(|| fs.iter().flatten().max().copied()).unwrap_or(0);
            SimplicialComplex::from_facets(n, &fs)?
        }
        _ => return Err(Error::invalid("shifted-complex takes either a graph file or --facets")),
    };
    let o = order(cli)?;
    let (s, cert) = shifted_complex(f, &o, &c, &options(cli))?;
    let pass = s.face_counts() == c.face_counts();
    Ok(Outcome {
        table: format!("complex {c}\nshifted {s}\nf-vector {:?} -> {:?}\n", c.face_counts(), s.face_counts()),
        json: json!({
            "command": "shifted-complex",
            "seed": cli.seed,
            "order": o,
            "complex": c,
            "shifted": s,
            "face_counts": c.face_counts(),
            "shifted_face_counts": s.face_counts(),
            "certificate": cert,
        }),
        pass,
    })
}

fn sweep_cmd<F: Field>(f: &F, cli: &Cli, theorem: Theorem, n: usize) -> Result<Outcome> {
    let start = Instant::now();
    let run = match theorem {
        Theorem::Thm1 => sweep_theorem1(f, n, cli.seed)?,
        Theorem::Thm2 => sweep_theorem2(f, n, cli.seed)?,
    };
    // timing stays out of stdout so outputs replay byte for byte
    eprintln!("sweep finished in {:.2?}", start.elapsed());
    let pass = run.report.pass;
    Ok(Outcome {
        table: run.report.render_table(),
        json: json!({ "command": "sweep", "seed": cli.seed, "field": f.describe(), "report": run.report }),
        pass,
    })
}

fn properties_cmd<F: Field>(f: &F, cli: &Cli, samples: usize) -> Result<Outcome> {
    let opts = PropertyOptions {
        seed: cli.seed,
        samples,
        hyperplane_samples: samples.min(HYPERPLANE_SAMPLES),
        partial_support_samples: samples.min(PARTIAL_SUPPORT_SAMPLES),
    };
    let r = property_suite(f, &opts)?;
    Ok(Outcome {
        table: r.render_table(),
        pass: r.pass,
        json: json!({ "command": "properties", "seed": cli.seed, "field": f.describe(), "report": r }),
    })
}

/// `span{x1^2, x2^2}` over a field of characteristic two, where complement duality breaks.
pub fn negative_test(cli: &Cli) -> Result<Outcome> {
    let w = MonomialSet::new(Ring::Polynomial, 2, 2, [Monomial::poly(vec![2, 0]), Monomial::poly(vec![0, 2])])?;
    let o = order(cli)?;
    let opts = GinOptions { check_stability: false, ..options(cli) };
    let r = duality_report(&BinaryField, &o, &w, &opts)?;
    let pass = !r.holds;
    Ok(Outcome {
        table: format!(
            "W = {:?}\ngin {:?}\ncomplement {:?}\ngin of complement under {} {:?}\nduality violated as expected: {pass}\n",
            w.to_strings(),
            r.gin.to_strings(),
            r.complement.to_strings(),
            o.inverse(),
            r.dual.to_strings()
        ),
        json: json!({
            "command": "negative-test",
            "seed": cli.seed,
            "field": BinaryField.describe(),
            "space": w.to_strings(),
            "report": r,
            "violated": pass,
        }),
        pass,
    })
}
