//! `gauss` command-line front end.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 on usage errors.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::code::{
    canonicalize, is_isomorphic, parse_json, parse_paragraph_with, SignedParagraph, Symbol,
};
use crate::homology::{pairing, profile};
use crate::surface::{build_ribbon, summarize, symbolic_circle, trace_circles};
use crate::transforms::{join, reduce_to_word, split};
use crate::verify::{paint, verify_with, CorpusKind, CorpusSpec, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "gauss",
    version,
    about = "Realizability and genus of signed Gauss words and paragraphs"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Require every pair of words to share a symbol.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Input file; `-` or nothing reads stdin.
    path: Option<String>,

    /// Paragraph text given inline instead of a file.
    #[arg(short = 'e', long = "expr", conflicts_with = "path")]
    expr: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the input is a valid signed Gauss paragraph.
    Validate(Input),
    /// Print the canonical representative of the isomorphism class.
    Canon(Input),
    /// Decide whether two paragraphs are isomorphic.
    Iso {
        /// Files holding the two paragraphs (`-` for stdin, at most once).
        paths: Vec<String>,
        /// Inline paragraph text; may be given twice.
        #[arg(short = 'e', long = "expr")]
        exprs: Vec<String>,
    },
    /// Crossing count, Carter circle count, genus and planarity.
    Summary(Input),
    /// List the Carter circles (boundary walks).
    Circles(Input),
    /// Intersection numbers alpha and beta of a word.
    Profile(Input),
    /// Intersection pairing of a two-component paragraph.
    Pairing(Input),
    /// Split a word at a crossing into two components.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long = "at")]
        at: String,
    },
    /// Join the two components sharing a symbol, adding a fresh crossing.
    Join {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        shared: String,
        #[arg(long)]
        fresh: String,
    },
    /// Join components until a single word remains.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "j")]
        prefix: String,
    },
    /// Exhaustively cross-check every property on small corpora.
    Verify {
        /// Largest word size.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest two-component paragraph size.
        #[arg(long, default_value_t = 3)]
        max_paragraph_n: usize,
        /// Keep one element per isomorphism class.
        #[arg(long)]
        dedupe: bool,
        /// Run on a single thread.
        #[arg(long)]
        serial: bool,
    },
}

/// Domain failure: message for stderr, exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Env<'a> {
    stdin: &'a mut dyn Read,
    json: bool,
    strict: bool,
    color: bool,
}

impl Env<'_> {
    fn read_source(&mut self, path: Option<&str>) -> Result<(String, String), Failure> {
        match path {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure(format!("<stdin>: {e}")))?;
                Ok(("<stdin>".into(), s))
            }
            Some(p) => {
                let s = std::fs::read_to_string(p).map_err(|e| Failure(format!("{p}: {e}")))?;
                Ok((p.to_string(), s))
            }
        }
    }

    fn parse(&self, origin: &str, text: &str) -> Result<SignedParagraph, Failure> {
        let parsed = if text.trim_start().starts_with('{') {
            parse_json(text)
        } else {
            parse_paragraph_with(text, self.strict)
        };
        parsed.map_err(|e| Failure(format!("{origin}:{e}")))
    }

    fn paragraph(&mut self, input: &Input) -> Result<SignedParagraph, Failure> {
        let (origin, text) = match &input.expr {
            Some(e) => ("<expr>".to_string(), e.clone()),
            None => self.read_source(input.path.as_deref())?,
        };
        self.parse(&origin, &text)
    }

    fn emit_paragraph(&self, p: &SignedParagraph) -> String {
        if self.json {
            p.to_json()
        } else {
            p.to_text()
        }
    }
}

fn symbol(name: &str) -> Result<Symbol, Failure> {
    Ok(Symbol::new(name)?)
}

/// Runs the CLI with explicit streams; returns the exit status.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    color: bool,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    let mut env = Env {
        stdin,
        json: cli.json,
        strict: cli.strict,
        color,
    };
    match dispatch(cli.command, &mut env) {
        Ok((out, code)) => {
            let _ = writeln!(stdout, "{out}");
            code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "{}: {msg}", paint("error", "31", color));
            1
        }
    }
}

fn dispatch(command: Command, env: &mut Env) -> Result<(String, i32), Failure> {
    let json = env.json;
    let out = match command {
        Command::Validate(input) => {
            let p = env.paragraph(&input)?;
            if json {
                json!({"valid": true, "words": p.component_count(), "symbols": p.symbol_count()})
                    .to_string()
            } else {
                format!(
                    "valid: {} word(s), {} symbol(s)",
                    p.component_count(),
                    p.symbol_count()
                )
            }
        }
        Command::Canon(input) => {
            let p = env.paragraph(&input)?;
            env.emit_paragraph(&canonicalize(&p))
        }
        Command::Iso { paths, exprs } => {
            let mut sources = Vec::new();
            for e in exprs {
                sources.push(("<expr>".to_string(), e));
            }
            if paths.iter().filter(|p| p.as_str() == "-").count() > 1 {
                return Err(Failure("stdin can supply only one paragraph".into()));
            }
            for p in &paths {
                sources.push(env.read_source(Some(p))?);
            }
            if sources.len() == 1 {
                sources.push(env.read_source(None)?);
            }
            if sources.len() != 2 {
                return Err(Failure(format!(
                    "iso needs exactly two paragraphs, got {}",
                    sources.len()
                )));
            }
            let a = env.parse(&sources[0].0, &sources[0].1)?;
            let b = env.parse(&sources[1].0, &sources[1].1)?;
            let iso = is_isomorphic(&a, &b);
            if json {
                json!({"isomorphic": iso}).to_string()
            } else if iso {
                "isomorphic".to_string()
            } else {
                "not isomorphic".to_string()
            }
        }
        Command::Summary(input) => {
            let s = summarize(&env.paragraph(&input)?)?;
            if json {
                serde_json::to_string(&s)?
            } else {
                s.to_string()
            }
        }
        Command::Circles(input) => {
            let p = env.paragraph(&input)?;
            let r = build_ribbon(&p);
            let circles = trace_circles(&r);
            if json {
                let list: Vec<_> = circles
                    .iter()
                    .map(|c| {
                        let symbolic: Vec<String> = symbolic_circle(&r, c)
                            .iter()
                            .map(|e| e.to_string())
                            .collect();
                        json!({"darts": c.signed_ids(), "symbolic": symbolic})
                    })
                    .collect();
                json!({"b": circles.len(), "circles": list}).to_string()
            } else {
                let mut lines = vec![format!("b={}", circles.len())];
                for (i, c) in circles.iter().enumerate() {
                    let ids: Vec<String> =
                        c.signed_ids().iter().map(|d| format!("{d:+}")).collect();
                    let edges: Vec<String> = symbolic_circle(&r, c)
                        .iter()
                        .map(|e| e.to_string())
                        .collect();
                    lines.push(format!(
                        "c{}: {} | {}",
                        i + 1,
                        ids.join(" "),
                        edges.join(" ")
                    ));
                }
                lines.join("\n")
            }
        }
        Command::Profile(input) => {
            let p = env.paragraph(&input)?;
            let w = p.as_word().ok_or_else(|| {
                Failure(format!(
                    "profile needs a single word, got {} components",
                    p.component_count()
                ))
            })?;
            let prof = profile(w);
            if json {
                serde_json::to_string(&prof)?
            } else {
                let alpha: Vec<String> =
                    prof.alpha.iter().map(|(s, v)| format!("{s}={v}")).collect();
                let beta: Vec<String> = prof
                    .beta
                    .iter()
                    .map(|((i, j), v)| format!("({i},{j})={v}"))
                    .collect();
                format!(
                    "alpha: {}\nbeta: {}\nplanar={}",
                    alpha.join(" "),
                    beta.join(" "),
                    prof.is_zero()
                )
            }
        }
        Command::Pairing(input) => {
            let v = pairing(&env.paragraph(&input)?)?;
            if json {
                json!({"pairing": v}).to_string()
            } else {
                format!("pairing={v}")
            }
        }
        Command::Split { input, at } => {
            let p = env.paragraph(&input)?;
            let w = p.as_word().ok_or_else(|| {
                Failure(format!(
                    "split needs a single word, got {} components",
                    p.component_count()
                ))
            })?;
            env.emit_paragraph(&split(w, &symbol(&at)?)?)
        }
        Command::Join {
            input,
            shared,
            fresh,
        } => {
            let p = env.paragraph(&input)?;
            let shared = symbol(&shared)?;
            let occ = p
                .occurrences_of(&shared)
                .ok_or_else(|| Failure(format!("symbol `{shared}` does not occur")))?;
            let joined = join(&p, occ.pos.0, occ.neg.0, &shared, &symbol(&fresh)?)?;
            env.emit_paragraph(&joined)
        }
        Command::Reduce { input, prefix } => {
            let p = env.paragraph(&input)?;
            let w = SignedParagraph::new(vec![reduce_to_word(&p, &prefix)?])?;
            env.emit_paragraph(&w)
        }
        Command::Verify {
            max_n,
            max_paragraph_n,
            dedupe,
            serial,
        } => {
            if max_n == 0 || max_paragraph_n == 0 {
                return Err(Failure("corpus sizes must be at least 1".into()));
            }
            let opts = VerifyOptions { parallel: !serial };
            let reports = [
                verify_with(
                    &CorpusSpec {
                        max_n,
                        dedupe,
                        kind: CorpusKind::Words,
                    },
                    opts,
                ),
                verify_with(
                    &CorpusSpec {
                        max_n: max_paragraph_n,
                        dedupe,
                        kind: CorpusKind::TwoComponent,
                    },
                    opts,
                ),
            ];
            let ok = reports.iter().all(|r| r.hard_pass());
            let out = if json {
                serde_json::to_string(&json!({"pass": ok, "reports": reports}))?
            } else {
                let mut s: Vec<String> = reports.iter().map(|r| r.to_text(env.color)).collect();
                s.push(format!("overall: {}", if ok { "pass" } else { "fail" }));
                s.join("\n")
            };
            return Ok((out, if ok { 0 } else { 1 }));
        }
    };
    Ok((out, 0))
}
