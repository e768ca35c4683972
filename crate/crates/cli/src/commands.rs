use std::fmt::Write as _;

use subsample::estimators::{
    degree_profile, estimate_prefix_density, frequency_profile, lln_trace, multiplicity_profile, prefix_density_vector,
};
use subsample::graph_core::io::{read_edge_seq, read_label_seq, write_edge_seq, write_label_seq, write_vertex_graph};
use subsample::graph_core::KeyKind;
use subsample::invariance::{
    test_equivalence, test_exchangeability, test_idempotence, test_involution_invariance, TestReport,
};
use subsample::models::examples;
use subsample::models::{graphon_draw, misspec_table, paintbox_sequence, Paintbox, StepGraphon};
use subsample::samplers::{diagnose_limit, DEFAULT_TOLERANCE};
use subsample::{Algorithm, RandomStream, RhoSchedule, Sample, SamplerSpec};

use crate::args::*;
use crate::input::{emit, load_input, load_pattern, read_text, CliError, CliResult};

/// Whether the command succeeded in the exit-status sense (a failed test is
/// still a completed command).
pub type Passed = bool;

fn spec_of(a: &SamplerArgs) -> CliResult<SamplerSpec> {
    let algo: Algorithm = a.algo.parse()?;
    let rho = a.rho.as_deref().map(str::parse::<RhoSchedule>).transpose()?;
    Ok(SamplerSpec::new(algo, rho, a.p)?)
}

/// Spec, loaded input and input size `n` (whole input by default).
fn setup(a: &SamplerArgs) -> CliResult<(SamplerSpec, Sample, usize)> {
    let spec = spec_of(a)?;
    let y = load_input(&a.input, spec.algorithm().input_kind())?;
    let n = a.n.unwrap_or(y.size());
    Ok((spec, y, n))
}

fn positive_reps(reps: usize) -> CliResult<()> {
    if reps == 0 {
        return Err(CliError::usage("--reps must be positive"));
    }
    Ok(())
}

fn required<T: Copy>(v: Option<T>, flag: &str, name: Generator) -> CliResult<T> {
    v.ok_or_else(|| CliError::usage(format!("generator {name:?} needs --{flag}")))
}

pub fn generate(a: &GenerateArgs) -> CliResult<Passed> {
    let n = || required(a.n, "n", a.name);
    let body = match a.name {
        Generator::Star => write_vertex_graph(&examples::star_vertex(n()?)),
        Generator::StarEdges => write_edge_seq(&examples::star_edgeseq(n()?)),
        Generator::Matching => write_edge_seq(&examples::matching_edgeseq(n()?)),
        Generator::Y4 => write_vertex_graph(&examples::y4()),
        Generator::HalfMultiplicity => write_edge_seq(&examples::half_multiplicity(n()?)),
        Generator::Cycle => write_vertex_graph(&examples::cycle(n()?)),
        Generator::Complete => write_vertex_graph(&examples::complete(n()?)),
        Generator::Alternating => write_label_seq(&examples::alternating_seq(n()?)),
        Generator::Singletons => write_label_seq(&examples::all_singletons_seq(n()?)),
        Generator::Graphon => {
            let path = a.file.as_ref().ok_or_else(|| CliError::usage("generator graphon needs --file"))?;
            let w = StepGraphon::parse(&read_text(path)?).map_err(|e| CliError::in_file(path, e))?;
            let k = required(a.k, "k", a.name)?;
            write_vertex_graph(&graphon_draw(&w, k, &mut RandomStream::new(a.seed, 0)))
        }
        Generator::Paintbox => {
            let pb = Paintbox::new(a.atoms.clone(), a.dust)?;
            let k = required(a.k, "k", a.name)?;
            write_label_seq(&paintbox_sequence(&pb, k, &mut RandomStream::new(a.seed, 0)))
        }
    };
    emit(a.out.as_ref(), a.seed, &body)?;
    Ok(true)
}

pub fn sample(a: &SampleArgs) -> CliResult<Passed> {
    let (spec, y, n) = setup(&a.sampler)?;
    let x = spec.sample(&y, n, a.k, &mut RandomStream::new(a.seed, 0))?;
    emit(a.out.as_ref(), a.seed, &x.to_text())?;
    Ok(true)
}

pub fn estimate(c: &EstimateCommand) -> CliResult<Passed> {
    match c {
        EstimateCommand::Density(a) => density(a),
        EstimateCommand::DegreeProfile(a) => {
            let y = read_edge_seq(&read_text(&a.input)?).map_err(|e| CliError::in_file(&a.input, e))?;
            let p = degree_profile(&y, &a.schedule)?;
            emit(a.out.as_ref(), 0, &p.to_csv())?;
            Ok(true)
        }
        EstimateCommand::MultiplicityProfile(a) => {
            let y = read_edge_seq(&read_text(&a.input)?).map_err(|e| CliError::in_file(&a.input, e))?;
            let p = multiplicity_profile(&y, &a.schedule)?;
            emit(a.out.as_ref(), 0, &p.to_csv())?;
            Ok(true)
        }
        EstimateCommand::FrequencyProfile(a) => {
            let y = read_label_seq(&read_text(&a.input)?).map_err(|e| CliError::in_file(&a.input, e))?;
            let p = frequency_profile(&y, &a.schedule)?;
            let mut body = String::from("n,label,frequency\n");
            for (n, row) in a.schedule.iter().zip(&p.freq) {
                for (label, f) in row {
                    let _ = writeln!(body, "{n},{label},{f}");
                }
            }
            emit(a.out.as_ref(), 0, &body)?;
            Ok(true)
        }
        EstimateCommand::Lln(a) => lln(a),
        EstimateCommand::Misspec(a) => {
            println!("{}", misspec_table(a.k, a.j)?);
            Ok(true)
        }
    }
}

fn density(a: &DensityArgs) -> CliResult<Passed> {
    positive_reps(a.reps)?;
    let (spec, y, n) = setup(&a.sampler)?;
    let body = match &a.pattern {
        Some(path) => {
            let pattern = load_pattern(path, spec.algorithm().output_kind())?;
            let (p, se) = estimate_prefix_density(&spec, &y, n, &pattern, a.reps, a.seed)?;
            format!("pattern_key,density,stderr\n{},{p},{se}\n", pattern.key())
        }
        None => prefix_density_vector(&spec, &y, n, a.k, a.reps, a.seed)?.to_csv(),
    };
    emit(a.out.as_ref(), a.seed, &body)?;
    Ok(true)
}

fn lln(a: &LlnArgs) -> CliResult<Passed> {
    positive_reps(a.reps)?;
    let (spec, y, n) = setup(&a.sampler)?;
    let kind = spec.algorithm().output_kind();
    let trace = match a.statistic {
        Statistic::Edge if kind == KeyKind::VertexGraph => {
            let f = |s: &Sample| match s {
                Sample::Vertex(g) => f64::from(u8::from(g.has_edge(1, 2))),
                _ => f64::NAN,
            };
            lln_trace(&spec, &y, n, 2, f, &a.schedule, a.reps, a.seed)?
        }
        Statistic::FirstLabel(label) if kind == KeyKind::Sequence => {
            let f = move |s: &Sample| match s {
                Sample::Sequence(q) => f64::from(u8::from(q.entries()[0] == label)),
                _ => f64::NAN,
            };
            lln_trace(&spec, &y, n, 1, f, &a.schedule, a.reps, a.seed)?
        }
        _ => {
            return Err(CliError::usage(format!(
                "statistic {:?} does not apply to outputs of {}",
                a.statistic,
                spec.algorithm()
            )))
        }
    };
    let mut body = trace.to_csv();
    if let Some(s) = trace.slope {
        let _ = writeln!(body, "# slope={s}");
    }
    emit(a.out.as_ref(), a.seed, &body)?;
    Ok(true)
}

fn report(r: &TestReport, common: &TestCommon) -> CliResult<Passed> {
    if let Some(path) = &common.out {
        emit(Some(path), common.seed, &r.to_csv())?;
    }
    emit(None, common.seed, &r.to_string())?;
    Ok(r.pass)
}

pub fn test(c: &TestCommand) -> CliResult<Passed> {
    match c {
        TestCommand::Exchangeability(a) => {
            positive_reps(a.common.reps)?;
            let (spec, y, n) = setup(&a.sampler)?;
            report(&test_exchangeability(&spec, &y, n, a.k, a.common.reps, a.common.seed)?, &a.common)
        }
        TestCommand::Idempotence(a) => {
            positive_reps(a.common.reps)?;
            let (spec, y, n) = setup(&a.sampler)?;
            report(&test_idempotence(&spec, &y, n, a.m, a.k, a.common.reps, a.common.seed)?, &a.common)
        }
        TestCommand::Equivalence(a) => {
            positive_reps(a.common.reps)?;
            let (spec, y, n) = setup(&a.sampler)?;
            let y2 = load_input(&a.input2, spec.algorithm().input_kind())?;
            let n = a.sampler.n.unwrap_or(n.min(y2.size()));
            report(&test_equivalence(&spec, &y, &y2, n, a.k_max, a.common.reps, a.common.seed)?, &a.common)
        }
        TestCommand::Involution(a) => {
            positive_reps(a.common.reps)?;
            let y = match load_input(&a.input, subsample::samplers::InputKind::Vertex)? {
                Sample::Vertex(g) => g,
                _ => unreachable!("vertex input requested"),
            };
            let n = a.n.unwrap_or(y.n());
            let g = y.restrict(n)?;
            let law = root_law(&a.root, &g)?;
            report(&test_involution_invariance(&law, &y, n, a.radius, a.common.reps, a.common.seed)?, &a.common)
        }
    }
}

/// Root weights for `uniform`, `degree` or `vertex:<v>`.
fn root_law(root: &str, g: &subsample::VertexGraph) -> CliResult<Vec<f64>> {
    let n = g.n();
    match root.split_once(':') {
        None if root == "uniform" => Ok(vec![1.0; n]),
        None if root == "degree" => Ok((1..=n as u32).map(|v| g.degree(v) as f64).collect()),
        Some(("vertex", v)) => {
            let v: usize = v.parse().map_err(|e| CliError::usage(format!("bad root vertex `{v}`: {e}")))?;
            if !(1..=n).contains(&v) {
                return Err(CliError::usage(format!("root vertex {v} is not in 1..={n}")));
            }
            let mut law = vec![0.0; n];
            law[v - 1] = 1.0;
            Ok(law)
        }
        _ => Err(CliError::usage(format!("unknown root law `{root}` (use uniform, degree or vertex:<v>)"))),
    }
}

pub fn diagnose(a: &DiagnoseArgs) -> CliResult<Passed> {
    positive_reps(a.reps)?;
    let (spec, y, _) = setup(&a.sampler)?;
    let tolerance = a.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let d = diagnose_limit(&spec, &y, a.k, &a.schedule, a.reps, a.seed, tolerance)?;
    if let Some(path) = &a.out {
        emit(Some(path), a.seed, &d.to_csv())?;
    }
    let mut body = d.tv_csv();
    let _ = writeln!(body, "# tolerance={tolerance}");
    let _ = writeln!(body, "# verdict={}", d.verdict);
    emit(None, a.seed, &body)?;
    Ok(true)
}
