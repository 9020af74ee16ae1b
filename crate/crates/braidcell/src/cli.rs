//! Command-line front end: system ingestion, queries, wave rendering, and
//! the fuzz harness. The `braidcell` binary is a thin wrapper around the
//! functions here; each returns its printable output so they are directly
//! testable.

use std::fmt::Write as _;
use std::sync::Mutex;

use crate::braid::{self, PositiveWord, SignedWord};
use crate::cellgraph::CellGraph;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem};
use crate::decat;
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::perverse::PerverseTable;
use crate::recovery;
use crate::ring::LaurentPoly;
use crate::sampling::{random_positive_word, random_signed_word, SplitMix64};
use crate::zigzag::{self, dihedral_wave, ZComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::Parse(format!(
                "unknown format `{other}` (expected `table` or `text`)"
            ))),
        }
    }
}

/// Validated run configuration shared by the subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system_path: Option<String>,
    pub system_type: Option<String>,
    pub base: Option<String>,
    pub radius: usize,
    pub seed: u64,
    pub samples: usize,
    pub max_len: usize,
    pub budget: usize,
    pub format: OutputFormat,
    pub force_base: bool,
    pub allow_forced: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            system_path: None,
            system_type: None,
            base: None,
            radius: 16,
            seed: 1,
            samples: 300,
            max_len: 10,
            budget: crate::coxeter::DEFAULT_ELEMENT_BUDGET,
            format: OutputFormat::Table,
            force_base: false,
            allow_forced: false,
        }
    }
}

impl RunConfig {
    pub fn load_system(&self) -> Result<CoxeterSystem> {
        let matrix = match (&self.system_path, &self.system_type) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}")))?;
                CoxeterMatrix::from_json(&text)?
            }
            (None, Some(name)) => CoxeterMatrix::named(name)?,
            (None, None) => {
                return Err(Error::Parse(
                    "one of --system <path> or --type <name> is required".into(),
                ))
            }
            (Some(_), Some(_)) => {
                return Err(Error::Parse(
                    "--system and --type are mutually exclusive".into(),
                ))
            }
        };
        Ok(CoxeterSystem::with_budget(matrix, self.budget))
    }

    pub fn base_index(&self, sys: &CoxeterSystem) -> Result<u8> {
        match &self.base {
            Some(name) => sys.matrix().gen_index(name),
            None => Ok(0),
        }
    }

    pub fn build_graph(&self, sys: &CoxeterSystem) -> Result<CellGraph> {
        if self.radius < 1 {
            return Err(Error::RadiusTooSmall(self.radius as i64));
        }
        let base = self.base_index(sys)?;
        if self.force_base {
            CellGraph::build_forced(sys, base, self.radius)
        } else {
            CellGraph::build(sys, base, self.radius)
        }
    }

    /// Graph for the categorical operations: a forced base is refused unless
    /// explicitly overridden.
    pub fn categorical_graph(&self, sys: &CoxeterSystem) -> Result<CellGraph> {
        let mut graph = self.build_graph(sys)?;
        if graph.forced_base() {
            if !self.allow_forced {
                return Err(Error::BadBaseChoice(
                    "graph was built with --force-base; pass --override to act on it anyway".into(),
                ));
            }
            graph.set_categorical_override(true);
        }
        Ok(graph)
    }
}

/// `nf`: Garside normal form of a positive word.
pub fn cmd_nf(cfg: &RunConfig, word_text: &str) -> Result<String> {
    let sys = cfg.load_system()?;
    let word = PositiveWord::parse(&sys, word_text)?;
    let nf = braid::normal_form(&sys, &word)?;
    Ok(format!("{}\n", nf.render(&sys)))
}

/// `recover`: normal form read off the categorical action, with an optional
/// step trace.
pub fn cmd_recover(cfg: &RunConfig, word_text: &str, trace: bool) -> Result<String> {
    let sys = cfg.load_system()?;
    let graph = cfg.categorical_graph(&sys)?;
    let word = PositiveWord::parse(&sys, word_text)?;
    let (nf, steps) = recovery::recover_traced(&sys, &graph, &word)?;
    let mut out = String::new();
    if trace {
        for (i, step) in steps.steps.iter().enumerate() {
            let anchors = step
                .anchor_vertices
                .iter()
                .map(|&v| format!("[{}]", sys.display(graph.vertex(v))))
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(
                out,
                "step {i}: k={} anchors={{{}}} pick {}{}",
                step.top_degree,
                anchors,
                sys.matrix().name(step.chosen),
                if step.factor_closed {
                    "  (factor closed)"
                } else {
                    ""
                }
            );
        }
    }
    let _ = writeln!(out, "{}", nf.render(&sys));
    Ok(out)
}

fn render_wave_frame(
    sys: &CoxeterSystem,
    graph: &CellGraph,
    complex: &ZComplex,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => zigzag::dump(sys, graph, complex),
        OutputFormat::Table => {
            let mut out = PerverseTable::from_complex(complex).render(sys, graph);
            let mut arrows: Vec<String> = complex
                .entries()
                .map(|(i, j, m)| {
                    let (a, b) = (complex.objects()[i], complex.objects()[j]);
                    let kind = match m.kind {
                        zigzag::MorKind::Identity => "id",
                        zigzag::MorKind::Edge => "edge",
                        zigzag::MorKind::Loop => "loop",
                    };
                    format!(
                        "  [{}] -> [{}]  ({kind})",
                        sys.display(graph.vertex(a.vertex)),
                        sys.display(graph.vertex(b.vertex))
                    )
                })
                .collect();
            arrows.sort();
            for a in arrows {
                out.push_str(&a);
                out.push('\n');
            }
            out
        }
    }
}

/// `wave`: dihedral wave frames `l = 0..=steps` for `I2(m)` starting at the
/// alternating vertex `[k]`, or the frames of an explicit word on an
/// explicit vertex in any system.
pub fn cmd_wave(
    cfg: &RunConfig,
    m: Option<usize>,
    k: Option<usize>,
    steps: usize,
    vertex: Option<&str>,
    word_text: Option<&str>,
) -> Result<String> {
    let mut out = String::new();
    match (m, k) {
        (Some(m), Some(k)) => {
            for l in 0..=steps {
                let wave = dihedral_wave(m, k, l)?;
                let applied = PositiveWord::new(wave.word.clone());
                let _ = writeln!(out, "l={l}  applied=[{}]", applied.display(&wave.system));
                out.push_str(&render_wave_frame(
                    &wave.system,
                    &wave.graph,
                    &wave.complex,
                    cfg.format,
                ));
                out.push('\n');
            }
        }
        _ => {
            let sys = cfg.load_system()?;
            let graph = cfg.categorical_graph(&sys)?;
            let vertex_text = vertex
                .ok_or_else(|| Error::Parse("without --m/--k, pass --vertex and --word".into()))?;
            let word_text = word_text
                .ok_or_else(|| Error::Parse("without --m/--k, pass --vertex and --word".into()))?;
            let w = sys.canonicalize(&PositiveWord::parse(&sys, vertex_text)?.letters)?;
            let word = PositiveWord::parse(&sys, word_text)?;
            let steps = steps.min(word.len());
            for l in 0..=steps {
                let suffix = &word.letters[word.len() - l..];
                let complex = zigzag::act_word(&graph, suffix, &ZComplex::unit(&graph, w)?)?;
                let _ = writeln!(
                    out,
                    "l={l}  applied=[{}]",
                    PositiveWord::new(suffix.to_vec()).display(&sys)
                );
                out.push_str(&render_wave_frame(&sys, &graph, &complex, cfg.format));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

/// `kl`: all Kazhdan-Lusztig polynomials `h_{y,w}` of one element.
pub fn cmd_kl(cfg: &RunConfig, word_text: &str) -> Result<String> {
    let sys = cfg.load_system()?;
    let hecke = Hecke::new(&sys);
    let w = sys.canonicalize(&PositiveWord::parse(&sys, word_text)?.letters)?;
    let kl = hecke.kl_basis(w)?;
    let mut out = String::new();
    let mut terms: Vec<_> = kl.terms().collect();
    terms.sort_by_key(|&(y, _)| (sys.len(y), sys.word(y)));
    for (y, h) in terms {
        let _ = writeln!(out, "h[{}, {}] = {}", sys.display(y), sys.display(w), h);
    }
    Ok(out)
}

/// `hom`: the graded hom rank between two indecomposables.
pub fn cmd_hom(cfg: &RunConfig, x_text: &str, y_text: &str) -> Result<String> {
    let sys = cfg.load_system()?;
    let hecke = Hecke::new(&sys);
    let x = sys.canonicalize(&PositiveWord::parse(&sys, x_text)?.letters)?;
    let y = sys.canonicalize(&PositiveWord::parse(&sys, y_text)?.letters)?;
    let rank = hecke.hom_rank(x, y)?;
    Ok(format!(
        "hom([{}], [{}]) = {}\n",
        sys.display(x),
        sys.display(y),
        rank
    ))
}

/// `burau`: the twisted reduced Burau matrix of one braid generator, with
/// the raw (KL basis) matrix alongside.
pub fn cmd_burau(n: usize, i: usize) -> Result<String> {
    let data = decat::burau_matrix(n, i)?;
    let mut out = String::new();
    let _ = writeln!(out, "scaled basis ((-1)^(j-1) v^j [B_j]):");
    out.push_str(&decat::render_matrix(&data.scaled));
    let _ = writeln!(out, "raw KL basis:");
    out.push_str(&decat::render_matrix(&data.raw));
    Ok(out)
}

/// `decat-check`: sampled signed words, comparing the class of the action
/// with the Hecke action.
pub fn cmd_decat_check(cfg: &RunConfig) -> Result<String> {
    let sys = cfg.load_system()?;
    let graph = cfg.categorical_graph(&sys)?;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut pass = 0usize;
    let mut fail = Vec::new();
    for _ in 0..cfg.samples {
        let letters = random_signed_word(&mut rng, sys.rank(), cfg.max_len);
        let word = SignedWord { letters };
        if decat::verify_decat(&graph, &word)? {
            pass += 1;
        } else {
            fail.push(word);
        }
    }
    let mut out = format!("decat-check: {pass}/{} PASS\n", cfg.samples);
    if let Some(word) = fail.first() {
        let rendered = word
            .letters
            .iter()
            .map(|&(s, pos)| format!("{}{}", if pos { "" } else { "-" }, sys.matrix().name(s)))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "first counterexample: {rendered}");
        return Err(Error::Parse(out));
    }
    Ok(out)
}

/// Outcome of one fuzz case.
enum CaseOutcome {
    Pass,
    Fail(String),
    Budget(String),
}

/// `fuzz`: seeded random positive words through the full cross-check stack:
/// the Garside report, decategorification, and the rewriting oracle.
pub fn cmd_fuzz(cfg: &RunConfig) -> Result<String> {
    let sys = cfg.load_system()?;
    let graph = cfg.categorical_graph(&sys)?;
    let mut rng = SplitMix64::new(cfg.seed);
    let words: Vec<PositiveWord> = (0..cfg.samples)
        .map(|_| PositiveWord::new(random_positive_word(&mut rng, sys.rank(), cfg.max_len)))
        .collect();

    let run_case = |word: &PositiveWord| -> CaseOutcome {
        let run = || -> Result<Option<String>> {
            let report = recovery::check_garside_theorem(&sys, &graph, word)?;
            if !report.pass() {
                return Ok(Some(report.render(&sys)));
            }
            let signed = SignedWord {
                letters: word.letters.iter().map(|&s| (s, true)).collect(),
            };
            if !decat::verify_decat(&graph, &signed)? {
                return Ok(Some(format!("decat mismatch on [{}]", word.display(&sys))));
            }
            let oracle = braid::oracle_normal_form(&sys, word)?;
            let nf = braid::normal_form(&sys, word)?;
            if oracle != nf {
                return Ok(Some(format!("oracle mismatch on [{}]", word.display(&sys))));
            }
            Ok(None)
        };
        match run() {
            Ok(None) => CaseOutcome::Pass,
            Ok(Some(msg)) => CaseOutcome::Fail(msg),
            Err(Error::BudgetExceeded(msg)) => CaseOutcome::Budget(msg),
            Err(e) => CaseOutcome::Fail(format!("error on [{}]: {e}", word.display(&sys))),
        }
    };

    // fan the independent words out across workers; results keep word order
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8)
        .min(words.len().max(1));
    let results: Vec<Option<CaseOutcome>> = {
        let slots: Vec<Mutex<Option<CaseOutcome>>> =
            words.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for worker in 0..workers {
                let slots = &slots;
                let words = &words;
                let run_case = &run_case;
                scope.spawn(move || {
                    let mut idx = worker;
                    while idx < words.len() {
                        let outcome = run_case(&words[idx]);
                        *slots[idx].lock().unwrap() = Some(outcome);
                        idx += workers;
                    }
                });
            }
        });
        slots.into_iter().map(|m| m.into_inner().unwrap()).collect()
    };

    let mut pass = 0usize;
    let mut budget = 0usize;
    let mut first_budget = None;
    let mut first_failure = None;
    for outcome in results.into_iter().flatten() {
        match outcome {
            CaseOutcome::Pass => pass += 1,
            CaseOutcome::Budget(msg) => {
                budget += 1;
                if first_budget.is_none() {
                    first_budget = Some(msg);
                }
            }
            CaseOutcome::Fail(msg) => {
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
    }
    let failures = cfg.samples - pass - budget;
    let mut out = format!(
        "fuzz: {pass}/{} PASS, {failures} FAIL, {budget} budget-exceeded (seed {})\n",
        cfg.samples, cfg.seed
    );
    if let Some(msg) = first_budget {
        let _ = writeln!(out, "first budget hit: {msg}");
    }
    if let Some(msg) = first_failure {
        let _ = writeln!(out, "first failure: {msg}");
        return Err(Error::Parse(out));
    }
    Ok(out)
}

/// Exit code mapping: 0 success, 1 verification failure, 2 usage or parse
/// error, 3 budget exceeded.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) => 3,
        Error::Parse(_)
        | Error::UnknownGenerator(_)
        | Error::IndexOutOfRange(_)
        | Error::RadiusTooSmall(_)
        | Error::BadBaseChoice(_)
        | Error::VertexOutsideGraph(_) => 2,
        Error::NoAnchorFound(_)
        | Error::WavefrontOutOfRadius(_)
        | Error::ZigzagTruncationViolated(_)
        | Error::InconsistentDifferential(_)
        | Error::NotMinimal
        | Error::EmptyComplex => 1,
    }
}

/// Convenience used by examples and tests: a system plus its cell graph.
pub fn named_setup(name: &str, radius: usize) -> Result<(CoxeterSystem, CellGraph)> {
    let sys = CoxeterSystem::new(CoxeterMatrix::named(name)?);
    let graph = CellGraph::build(&sys, 0, radius)?;
    Ok((sys, graph))
}

/// Smoothness sweep used by `kl --cell`: checks that every `h_{y,w}` with
/// `w` in the cell is the expected power of `v`, returning the offenders.
pub fn smoothness_offenders(
    sys: &CoxeterSystem,
    graph: &CellGraph,
) -> Result<Vec<(String, String, LaurentPoly)>> {
    let hecke = Hecke::new(sys);
    let mut offenders = Vec::new();
    for &w in graph.vertices() {
        let kl = hecke.kl_basis(w)?;
        for (y, h) in kl.terms() {
            let expect = LaurentPoly::v_pow((sys.len(w) - sys.len(y)) as i32);
            if *h != expect {
                offenders.push((sys.display(y), sys.display(w), h.clone()));
            }
        }
    }
    Ok(offenders)
}
