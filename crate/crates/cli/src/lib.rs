//! Command-line surface of `git-instab`: parses a job, runs it with exact
//! arithmetic and renders a deterministic JSON (or CSV) document.

pub mod args;
pub mod input;
pub mod json;

use std::path::{Path, PathBuf};

use git_instab::convex::{
    affine_dim, contains_origin, min_norm_point, origin_in_interior, MinNormResult, PointSet,
};
use git_instab::gitcore::{
    check_generic_semistable, check_generic_stable, destab_rays, generic_state_sample, hm_index,
    sample_group_elements, stratify_samples, worst_1ps_search, GroupElement, Mode, OneParamSubgroup,
    SamplerConfig, StateSource, TorusContext,
};
use git_instab::polyalg::{
    binomial, parse_ideal, parse_polynomial, parse_polynomial_in, trivial_weight_necessary, IdealInput,
    DEFAULT_BUDGET,
};
use git_instab::rational::format_rational;
use git_instab::svg::{self, Projection};
use git_instab::{Error, Rational};
use num_traits::Zero;
use serde_json::{json, Map, Value};

pub use args::{Cli, Command, Format, Options};

pub const BUDGET_VAR: &str = "GIT_INSTAB_BUDGET";

/// A failed job: exit status plus a JSON diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub exit_code: i32,
    pub diagnostic: Value,
}

impl Failure {
    pub fn new(command: Option<&str>, error: &Error) -> Self {
        let (kind, exit_code) = match error {
            Error::TooLarge { .. } => ("budget_exhausted", 2),
            Error::Parse { .. } => ("parse_error", 1),
            _ => ("input_error", 1),
        };
        let mut body = json!({ "kind": kind, "message": error.to_string() });
        if let Error::Parse { offset, .. } = error {
            body["offset"] = json!(offset);
        }
        Failure {
            exit_code,
            diagnostic: json!({ "command": command, "error": body, "exit_code": exit_code }),
        }
    }

    pub fn usage(message: String) -> Self {
        Failure {
            exit_code: 1,
            diagnostic: json!({
                "command": null,
                "error": { "kind": "usage_error", "message": message },
                "exit_code": 1,
            }),
        }
    }
}

pub fn budget_from(value: Option<&str>) -> Result<u128, Error> {
    match value {
        None => Ok(DEFAULT_BUDGET),
        Some(text) => text
            .trim()
            .parse::<u128>()
            .ok()
            .filter(|b| *b > 0)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("{BUDGET_VAR} must be a positive integer, got {text:?}"))
            }),
    }
}

/// Result of a successful job: the rendered document and any picture written.
#[derive(Debug)]
pub struct Rendered {
    pub document: String,
    pub svg: Option<PathBuf>,
}

struct Report {
    fields: Map<String, Value>,
    rows: Vec<Vec<Rational>>,
    picture: Option<(PointSet, MinNormResult)>,
}

impl Report {
    fn new(fields: Value, rows: Vec<Vec<Rational>>) -> Self {
        let Value::Object(fields) = fields else {
            unreachable!("reports are JSON objects")
        };
        Report {
            fields,
            rows,
            picture: None,
        }
    }

    fn with_picture(mut self, set: PointSet, nearest: MinNormResult) -> Self {
        self.picture = Some((set, nearest));
        self
    }
}

fn sampler(o: &Options) -> SamplerConfig {
    SamplerConfig {
        trials: o.trials,
        entry_bound: o.entry_bound,
        stall: o.stall,
        seed: o.seed,
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn text_of(inline: &Option<String>, o: &Options) -> Result<Option<String>, Error> {
    match (inline, &o.input) {
        (Some(_), Some(_)) => Err(Error::InvalidArgument(
            "give the input inline or via --input, not both".into(),
        )),
        (Some(t), None) => Ok(Some(t.clone())),
        (None, Some(p)) => read_input(p).map(Some),
        (None, None) => Ok(None),
    }
}

fn ideal_source(o: &Options, text: &str, budget: u128) -> Result<StateSource, Error> {
    let n =
        o.n.ok_or_else(|| Error::InvalidArgument("--n is required for an ideal".into()))?;
    let m =
        o.m.ok_or_else(|| Error::InvalidArgument("--m is required for an ideal".into()))?;
    let ctx = TorusContext::new(n, o.mode)?;
    let ideal = IdealInput::new(n + 1, parse_ideal(text, n + 1)?)?;
    StateSource::hilbert_point(ctx, ideal, m, budget)
}

fn form_source(o: &Options, text: &str) -> Result<StateSource, Error> {
    let f = match o.n {
        Some(n) => parse_polynomial_in(text, n + 1)?,
        None => parse_polynomial(text)?,
    };
    if f.nvars() < 2 {
        return Err(Error::InvalidArgument(
            "the form mentions fewer than two variables; pass --n".into(),
        ));
    }
    if let (Some(d), Some(actual)) = (o.d, f.degree()) {
        if d != actual {
            return Err(Error::InvalidArgument(format!(
                "--d {d} but the form has degree {actual}"
            )));
        }
    }
    let ctx = TorusContext::new(f.nvars() - 1, o.mode)?;
    StateSource::form(ctx, f)
}

fn source(o: &Options, budget: u128) -> Result<StateSource, Error> {
    if o.ideal.is_some() || (o.f.is_none() && o.m.is_some()) {
        let text =
            text_of(&o.ideal, o)?.ok_or_else(|| Error::InvalidArgument("--ideal is required".into()))?;
        return ideal_source(o, &text, budget);
    }
    let text = text_of(&o.f, o)?
        .ok_or_else(|| Error::InvalidArgument("--f, --ideal or --input is required".into()))?;
    form_source(o, &text)
}

fn coords(w: &git_instab::gitcore::WeightVector) -> Vec<Rational> {
    w.coords().to_vec()
}

fn state_cmd(src: &StateSource) -> Result<Report, Error> {
    let state = src.state()?;
    let set = state.point_set();
    let nearest = min_norm_point(&set);
    let report = Report::new(
        json!({
            "weights": json::state(&state),
            "count": state.len(),
            "contains_origin": nearest.norm_squared.is_zero(),
            "origin_in_interior": origin_in_interior(&set),
            "nearest": json::nearest(&nearest, &set),
        }),
        state.weights().map(coords).collect(),
    );
    Ok(report.with_picture(set, nearest))
}

fn hm_index_cmd(src: &StateSource, o: &Options) -> Result<Report, Error> {
    let text = o
        .rho
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--rho is required".into()))?;
    let rho = OneParamSubgroup::from_i64(src.context(), &input::parse_integers(text)?)?;
    let state = src.state()?;
    let index = hm_index(&state, &rho);
    let attaining: Vec<_> = state.weights().filter(|w| -w.pair(&rho) == index).collect();
    Ok(Report::new(
        json!({
            "rho": json::ints(rho.coords()),
            "hm_index": json::rat(&index),
            "destabilizing": index < Rational::from_integer(0.into()),
            "attaining_weights": json::weights(attaining),
            "weights": json::state(&state),
        }),
        state.weights().map(coords).collect(),
    ))
}

fn nearest_cmd(o: &Options) -> Result<Report, Error> {
    let text = text_of(&o.points, o)?
        .ok_or_else(|| Error::InvalidArgument("--points or --input is required".into()))?;
    let points = git_instab::rational::parse_vectors(&text)?;
    let set = PointSet::new(points)?;
    let nearest = min_norm_point(&set);
    let report = Report::new(
        json!({
            "points": Value::Array(set.points().iter().map(|p| json::vector(p)).collect()),
            "nearest": json::nearest(&nearest, &set),
            "contains_origin": contains_origin(&set),
            "origin_in_interior": origin_in_interior(&set),
            "affine_dim": affine_dim(&set),
        }),
        set.points().to_vec(),
    );
    Ok(report.with_picture(set, nearest))
}

fn worst_cmd(src: &StateSource, o: &Options) -> Result<Report, Error> {
    let size = src.context().nvars();
    let mut gs = vec![GroupElement::identity(size)?];
    if o.explore {
        gs.extend(sample_group_elements(size, &sampler(o))?);
    }
    let found = worst_1ps_search(src, &gs)?;
    let state = src.state_under(&found.g)?;
    let set = state.point_set();
    let rho = found.worst.rho.as_ref();
    let report = Report::new(
        json!({
            "verdict": found.verdict.as_str(),
            "rho": rho.map(|r| json::ints(r.coords())),
            "hm_index": rho.map(|r| json::rat(&hm_index(&state, r))),
            "norm_squared": json::rat(&found.worst.norm_squared),
            "nearest": json::nearest(&found.worst.certificate, &set),
            "conjugator": json::matrix(&found.g),
            "tori_explored": found.explored,
            "weights": json::state(&state),
        }),
        rho.map(|r| {
            r.coords()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect()
        })
        .into_iter()
        .collect(),
    );
    Ok(report.with_picture(set, found.worst.certificate))
}

fn destab_cmd(src: &StateSource) -> Result<Report, Error> {
    let state = src.state()?;
    let d = destab_rays(&state);
    Ok(Report::new(
        json!({
            "rays": Value::Array(d.rays.iter().map(|r| json::ints(r)).collect()),
            "open_cone_nonempty": d.open_cone_nonempty,
            "weights": json::state(&state),
        }),
        d.rays
            .iter()
            .map(|r| r.iter().map(|c| Rational::from_integer(c.clone())).collect())
            .collect(),
    ))
}

fn generic_state_cmd(src: &StateSource, o: &Options) -> Result<Report, Error> {
    let (state, cert) = generic_state_sample(src, &sampler(o))?;
    let full = src.full_weight_set()?;
    let set = state.point_set();
    let nearest = min_norm_point(&set);
    let report = Report::new(
        json!({
            "weights": json::state(&state),
            "count": state.len(),
            "full_count": full.len(),
            "complement": json::weights(&state.complement_in(&full)),
            "is_full": state == full,
            "contains_origin": nearest.norm_squared.is_zero(),
            "sampler": json::certificate(&cert),
        }),
        state.weights().map(coords).collect(),
    );
    Ok(report.with_picture(set, nearest))
}

fn certify_cmd(src: &StateSource, o: &Options) -> Result<Report, Error> {
    let cfg = sampler(o);
    let check = match src.context().mode() {
        Mode::SL => check_generic_stable(src, &cfg)?,
        Mode::GL => check_generic_semistable(src, &cfg)?,
    };
    let set = check.state.point_set();
    let report = Report::new(
        json!({
            "verdict": check.verdict.as_str(),
            "weights": json::state(&check.state),
            "contains_origin": check.contains_origin,
            "origin_in_interior": check.origin_in_interior,
            "nearest": json::nearest(&check.nearest, &set),
            "sampler": json::certificate(&check.certificate),
        }),
        check.state.weights().map(coords).collect(),
    );
    Ok(report.with_picture(set, check.nearest))
}

fn stratify_cmd(src: &StateSource, o: &Options) -> Result<Report, Error> {
    let size = src.context().nvars();
    let mut gs = vec![GroupElement::identity(size)?];
    gs.extend(sample_group_elements(size, &sampler(o))?);
    let strata = stratify_samples(src, &gs)?;
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for (k, s) in strata.iter().enumerate() {
        for w in s.state.weights() {
            let mut row = vec![Rational::from_integer(k.into())];
            row.extend(w.coords().iter().cloned());
            rows.push(row);
        }
        out.push(json!({
            "weights": json::state(&s.state),
            "complement": json::weights(&s.complement),
            "members": s.members.len(),
            "representative": json::matrix(&s.members[0]),
            "distinguished": s.distinguished,
            "contains_origin": contains_origin(&s.state.point_set()),
        }));
    }
    Ok(Report::new(json!({ "samples": gs.len(), "strata": out }), rows))
}

fn hilbert_state_cmd(o: &Options, budget: u128) -> Result<Report, Error> {
    let text = text_of(&o.ideal, o)?
        .ok_or_else(|| Error::InvalidArgument("--ideal or --input is required".into()))?;
    let src = ideal_source(o, &text, budget)?;
    let StateSource::HilbertPoint { ctx, m, ell, .. } = &src else {
        unreachable!("ideal_source builds Hilbert points")
    };
    let (n, m, ell) = (ctx.n(), *m, *ell);
    let mut report = state_cmd(&src)?;
    report.fields.insert("ell".into(), json!(ell));
    report.fields.insert(
        "degree_piece_dim".into(),
        json!(binomial(n as u64 + u64::from(m), u64::from(m)) as u64),
    );
    report.fields.insert(
        "trivial_weight_possible".into(),
        json!(trivial_weight_necessary(n, m, ell)?),
    );
    Ok(report)
}

fn projection(o: &Options, set: &PointSet) -> Result<Projection, Error> {
    match &o.svg_axes {
        None => Projection::for_set(set),
        Some(text) => match input::parse_integers(text)?.as_slice() {
            [i, j] if *i >= 0 && *j >= 0 => Ok(Projection::Axes(*i as usize, *j as usize)),
            _ => Err(Error::InvalidArgument(
                "--svg-axes takes two coordinates, e.g. 0,1".into(),
            )),
        },
    }
}

fn csv(rows: &[Vec<Rational>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

/// Runs one job; `budget` caps subset enumeration for Hilbert points.
pub fn run(command: &Command, budget: u128) -> Result<Rendered, Failure> {
    let fail = |e: Error| Failure::new(Some(command.name()), &e);
    let o = command.options();
    let (report, n) = match command {
        Command::Nearest(_) => (nearest_cmd(o).map_err(fail)?, None),
        Command::HilbertState(_) => (hilbert_state_cmd(o, budget).map_err(fail)?, o.n),
        _ => {
            let src = source(o, budget).map_err(fail)?;
            let report = match command {
                Command::State(_) => state_cmd(&src),
                Command::HmIndex(_) => hm_index_cmd(&src, o),
                Command::Worst(_) => worst_cmd(&src, o),
                Command::Destab(_) => destab_cmd(&src),
                Command::GenericState(_) => generic_state_cmd(&src, o),
                Command::Certify(_) => certify_cmd(&src, o),
                Command::Stratify(_) => stratify_cmd(&src, o),
                Command::Nearest(_) | Command::HilbertState(_) => unreachable!(),
            };
            (report.map_err(fail)?, Some(src.context().n()))
        }
    };

    let mut fields = report.fields;
    let svg = match (&o.svg, &report.picture) {
        (Some(path), Some((set, nearest))) => {
            let picture = svg::render(set, Some(nearest), projection(o, set).map_err(fail)?).map_err(fail)?;
            std::fs::write(path, picture).map_err(|e| {
                fail(Error::InvalidArgument(format!(
                    "cannot write {}: {e}",
                    path.display()
                )))
            })?;
            fields.insert("svg".into(), json!(path.display().to_string()));
            Some(path.clone())
        }
        (Some(_), None) => {
            return Err(fail(Error::InvalidArgument(format!(
                "{} has no point set to draw",
                command.name()
            ))))
        }
        (None, _) => None,
    };

    let document = match o.format {
        Format::Csv => csv(&report.rows),
        Format::Json => {
            fields.insert("command".into(), json!(command.name()));
            fields.insert("mode".into(), json!(o.mode.to_string()));
            fields.insert("seed".into(), json!(o.seed));
            fields.insert("n".into(), json!(n));
            let mut text = serde_json::to_string(&Value::Object(fields)).expect("JSON values serialize");
            text.push('\n');
            text
        }
    };
    Ok(Rendered { document, svg })
}
