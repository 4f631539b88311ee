//! Command-line front end. Parses itineraries, vertex paths, windows,
//! and polygons, runs the library operations, and prints grids, JSON,
//! or SVG. Exit codes: 0 success or predicate true, 1 predicate false,
//! 2 malformed input or violated precondition.

use std::ffi::OsString;
use std::fs;
use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use farey_sl2::apeirogon::dual_path;
use farey_sl2::frieze::{frieze_from_quiddity_cycle, quiddity};
use farey_sl2::io::{from_json, to_json, ItineraryDto, JsonInt, PathDto, PolygonDto, WindowDto};
use farey_sl2::limits::{classify_tail_limit, Direction};
use farey_sl2::render::{frieze_standard_form, svg_disc, window_tsv};
use farey_sl2::tiling::{phi, phi_raw, psi, PathPair, TilingWindow};
use farey_sl2::words::{contains_cycle_sequence, is_cycle_sequence};
use farey_sl2::{Error, FareyPath, Mat2, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "farey-sl2",
    version,
    about = "Tame SL2-tilings and friezes through paths in the Farey graph",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fill a window of the tiling determined by a pair of paths.
    Tile(TileArgs),
    /// Build a frieze from one period of its quiddity cycle.
    Frieze(FriezeArgs),
    /// Read the itinerary of a vertex path.
    Itinerary(ItineraryArgs),
    /// Extract the quiddity sequence certified by a window.
    Quiddity(QuiddityArgs),
    /// Evaluate a predicate: exit 0 when it holds, 1 when it does not.
    Check(CheckArgs),
    /// Classify the endpoint limits of an eventually periodic itinerary.
    Limits(LimitsArgs),
    /// List the dual-path vertices certified by a clockwise path window.
    Dual(DualArgs),
    /// Draw paths or a triangulated polygon on the disc as SVG.
    Render(RenderArgs),
    /// Self-test: fill windows, recover the pair, compare.
    Roundtrip(RoundtripArgs),
}

pub fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = match cli.cmd {
        Cmd::Tile(a) => cmd_tile(a),
        Cmd::Frieze(a) => cmd_frieze(a),
        Cmd::Itinerary(a) => cmd_itinerary(a),
        Cmd::Quiddity(a) => cmd_quiddity(a),
        Cmd::Check(a) => cmd_check(a),
        Cmd::Limits(a) => cmd_limits(a),
        Cmd::Dual(a) => cmd_dual(a),
        Cmd::Render(a) => cmd_render(a),
        Cmd::Roundtrip(a) => cmd_roundtrip(a),
    };
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------- inputs

/// Window ranges as parsed from "i0:i1,j0:j1".
#[derive(Clone, Copy, Debug)]
struct Window2 {
    i: (i64, i64),
    j: (i64, i64),
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("range {s:?} is not of the form lo:hi"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad index {:?}", lo.trim()))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad index {:?}", hi.trim()))?;
    if lo > hi {
        return Err(format!("range {s:?} is not well ordered"));
    }
    Ok((lo, hi))
}

fn parse_window(s: &str) -> std::result::Result<Window2, String> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| format!("window {s:?} is not of the form i0:i1,j0:j1"))?;
    Ok(Window2 {
        i: parse_range(i)?,
        j: parse_range(j)?,
    })
}

/// Inline text, or the contents of a file when the argument is @path.
fn read_source(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Error::Other(format!("cannot read {path}: {e}")))
        }
        None => Ok(arg.to_string()),
    }
}

/// A path given either as vertices or as an itinerary. Itineraries are
/// realized from the standard seed v_0 = 0, v_1 = inf over [lo, hi];
/// give vertex paths to pin the positions of a pair jointly.
fn parse_path_arg(arg: &str, lo: i64, hi: i64) -> Result<FareyPath> {
    let text = read_source(arg)?;
    let probe: serde_json::Value = from_json(&text)?;
    if probe.get("vertices").is_some() {
        from_json::<PathDto>(&text)?.to_path()
    } else {
        from_json::<ItineraryDto>(&text)?.to_spec().realize(lo, hi)
    }
}

fn parse_word(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Other(format!("bad integer {:?}", t.trim())))
        })
        .collect()
}

// --------------------------------------------------------------- outputs

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Svg,
    StandardForm,
}

fn color_enabled() -> bool {
    std::env::var("FAREY_SL2_COLOR")
        .map(|v| v != "0")
        .unwrap_or(true)
        && std::io::stdout().is_terminal()
}

fn verdict(ok: bool) -> ExitCode {
    let word = if ok { "true" } else { "false" };
    if color_enabled() {
        let code = if ok { 32 } else { 31 };
        println!("\x1b[{code}m{word}\x1b[0m");
    } else {
        println!("{word}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn print_window(w: &TilingWindow, format: Format) -> Result<ExitCode> {
    match format {
        Format::Tsv => print!("{}", window_tsv(w)),
        Format::Json => println!("{}", to_json(&WindowDto::from(w))),
        _ => return Err(Error::Other("window output supports: tsv, json".into())),
    }
    Ok(ExitCode::SUCCESS)
}

fn word_values(word: &[BigInt]) -> Vec<serde_json::Value> {
    word.iter()
        .map(|x| serde_json::to_value(JsonInt(x.clone())).expect("integer"))
        .collect()
}

fn print_word(start: i64, word: &[BigInt], format: Format) -> Result<ExitCode> {
    match format {
        Format::Tsv => {
            let ws: Vec<String> = word.iter().map(BigInt::to_string).collect();
            println!("{start}: {}", ws.join(" "));
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({ "start": start, "word": word_values(word) })
            );
        }
        _ => return Err(Error::Other("word output supports: tsv, json".into())),
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------------ tile

#[derive(Args)]
struct TileArgs {
    /// Row path: {"vertices":[...],"start":i} or {"left_period":[...],
    /// "core":[...],"right_period":[...]}; @file reads from a file.
    #[arg(long)]
    gamma: String,
    /// Column path, same forms as --gamma.
    #[arg(long)]
    delta: String,
    /// Window to fill, as i0:i1,j0:j1.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Window2,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Skip sign normalization and print the raw fill.
    #[arg(long)]
    raw: bool,
}

fn cmd_tile(a: TileArgs) -> Result<ExitCode> {
    let pair = PathPair {
        gamma: parse_path_arg(&a.gamma, a.window.i.0, a.window.i.1)?,
        delta: parse_path_arg(&a.delta, a.window.j.0, a.window.j.1)?,
    };
    let w = if a.raw {
        phi_raw(&pair, a.window.i, a.window.j)?
    } else {
        phi(&pair, a.window.i, a.window.j)?
    };
    print_window(&w, a.format)
}

// ---------------------------------------------------------------- frieze

#[derive(Args)]
struct FriezeArgs {
    /// One period of the quiddity cycle, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    quiddity: String,
    /// Order of the frieze; must be a multiple of the period length.
    #[arg(long)]
    order: Option<u32>,
    /// Window for tsv or json output; defaults to 0:n,0:n.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<Window2>,
    #[arg(long, value_enum, default_value_t = Format::StandardForm)]
    format: Format,
    /// First column of the standard-form block.
    #[arg(long, default_value_t = 0)]
    j0: i64,
    /// Number of columns of the standard-form block; defaults to the order.
    #[arg(long)]
    cols: Option<usize>,
}

fn cmd_frieze(a: FriezeArgs) -> Result<ExitCode> {
    let period = parse_word(&a.quiddity)?;
    if period.is_empty() {
        return Err(Error::Other("empty quiddity word".into()));
    }
    let n = a.order.unwrap_or(period.len() as u32) as i64;
    if n <= 0 || n % period.len() as i64 != 0 {
        return Err(Error::Other(format!(
            "order {n} is not a positive multiple of the period length {}",
            period.len()
        )));
    }
    let word: Vec<BigInt> = period.iter().cycle().take(n as usize).cloned().collect();
    match a.format {
        Format::StandardForm => {
            let cols = a.cols.unwrap_or(n as usize);
            let f = frieze_from_quiddity_cycle(
                &word,
                (a.j0, a.j0 + cols as i64 - 1 + n),
                (a.j0, a.j0 + cols as i64 - 1),
            )?;
            print!("{}", frieze_standard_form(&f, a.j0, cols)?);
            Ok(ExitCode::SUCCESS)
        }
        format => {
            let w = a.window.unwrap_or(Window2 {
                i: (0, n),
                j: (0, n),
            });
            let f = frieze_from_quiddity_cycle(&word, w.i, w.j)?;
            print_window(f.window(), format)
        }
    }
}

// ---------------------------------------------- itinerary and quiddity

#[derive(Args)]
struct ItineraryArgs {
    /// Vertex path JSON {"vertices":[...],"start":i}; @file reads a file.
    path: String,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

fn cmd_itinerary(a: ItineraryArgs) -> Result<ExitCode> {
    let path = from_json::<PathDto>(&read_source(&a.path)?)?.to_path()?;
    if path.is_closed() {
        let word = path.itinerary_period()?;
        print_word(path.start() + 1, &word, a.format)
    } else {
        let (start, word) = path.itinerary()?;
        print_word(start, &word, a.format)
    }
}

#[derive(Args)]
struct QuiddityArgs {
    /// Window JSON {"i0":...,"j0":...,"rows":[[...],...]}; @file reads a file.
    window: String,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

fn cmd_quiddity(a: QuiddityArgs) -> Result<ExitCode> {
    let w = from_json::<WindowDto>(&read_source(&a.window)?)?.to_window()?;
    let (start, word) = quiddity(&w)?;
    print_word(start, &word, a.format)
}

// ----------------------------------------------------------------- check

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PredicateName {
    /// Window JSON: every 3x3 connected minor vanishes.
    Tame,
    /// Window JSON: every 2x2 connected minor is 1.
    Sl2,
    /// Window JSON: every entry is positive.
    Positive,
    /// Comma-separated word: positive integers counting the triangles
    /// of a triangulated polygon around its boundary, last term dropped.
    CycleSeq,
    /// Comma-separated word: no contiguous subword is a cycle sequence.
    Acyclic,
    /// Path JSON: distinct vertices in clockwise circular order
    /// (a closed path is tested as a simple clockwise cycle).
    Clockwise,
    /// Closed-path JSON: every consecutive vertex triple is clockwise.
    Cn0,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    predicate: PredicateName,
    /// Word, window JSON, or path JSON, depending on the predicate.
    #[arg(allow_hyphen_values = true)]
    input: String,
}

fn cmd_check(a: CheckArgs) -> Result<ExitCode> {
    let ok = match a.predicate {
        PredicateName::Tame => from_json::<WindowDto>(&read_source(&a.input)?)?
            .to_window()?
            .is_tame()?,
        PredicateName::Sl2 => from_json::<WindowDto>(&read_source(&a.input)?)?
            .to_window()?
            .is_sl2()?,
        PredicateName::Positive => {
            let w = from_json::<WindowDto>(&read_source(&a.input)?)?.to_window()?;
            w.rows().iter().flatten().all(|x| x.is_positive())
        }
        PredicateName::CycleSeq => is_cycle_sequence(&parse_word(&a.input)?),
        PredicateName::Acyclic => !contains_cycle_sequence(&parse_word(&a.input)?),
        PredicateName::Clockwise => {
            let path = from_json::<PathDto>(&read_source(&a.input)?)?.to_path()?;
            if path.is_closed() {
                path.is_clockwise_simple_closed()?
            } else {
                path.is_clockwise()?
            }
        }
        PredicateName::Cn0 => from_json::<PathDto>(&read_source(&a.input)?)?
            .to_path()?
            .is_locally_clockwise()?,
    };
    Ok(verdict(ok))
}

// ---------------------------------------------------------------- limits

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dir {
    Forward,
    Backward,
    Both,
}

#[derive(Args)]
struct LimitsArgs {
    /// Itinerary JSON with the periodic tail(s) filled in.
    #[arg(long)]
    itinerary: String,
    #[arg(long, value_enum, default_value_t = Dir::Both)]
    dir: Dir,
}

fn cmd_limits(a: LimitsArgs) -> Result<ExitCode> {
    let dto = from_json::<ItineraryDto>(&read_source(&a.itinerary)?)?;
    let spec = dto.to_spec();
    let nl = dto.left_period.len() as i64;
    let nr = dto.right_period.len() as i64;
    let m = dto.core.len() as i64;
    let sides: &[Direction] = match a.dir {
        Dir::Forward => &[Direction::Forward],
        Dir::Backward => &[Direction::Backward],
        Dir::Both => &[Direction::Backward, Direction::Forward],
    };
    for dir in sides {
        let (word, path) = match dir {
            Direction::Forward => {
                if nr == 0 {
                    return Err(Error::MissingPeriod { side: "right" });
                }
                (&dto.right_period, spec.realize(0, m + nr + 2)?)
            }
            Direction::Backward => {
                if nl == 0 {
                    return Err(Error::MissingPeriod { side: "left" });
                }
                (&dto.left_period, spec.realize(-nl - 2, 1)?)
            }
        };
        let word: Vec<BigInt> = word.iter().map(|x| x.0.clone()).collect();
        let class = classify_tail_limit(&path, &word, *dir)?;
        let label = match dir {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        };
        println!("{label}: {class}");
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------------ dual

#[derive(Args)]
struct DualArgs {
    /// Clockwise vertex-path JSON; @file reads from a file.
    path: String,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

fn cmd_dual(a: DualArgs) -> Result<ExitCode> {
    let gamma = from_json::<PathDto>(&read_source(&a.path)?)?.to_path()?;
    let dual = dual_path(&gamma)?;
    match a.format {
        Format::Tsv => println!("{dual}"),
        Format::Json => println!("{}", to_json(&PathDto::from(&dual))),
        _ => return Err(Error::Other("dual output supports: tsv, json".into())),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- render

#[derive(Args)]
struct RenderArgs {
    /// Path JSON {"vertices":...} or polygon JSON {"n":...,
    /// "diagonals":[...]}; @file reads from a file.
    input: String,
}

fn cmd_render(a: RenderArgs) -> Result<ExitCode> {
    let text = read_source(&a.input)?;
    let probe: serde_json::Value = from_json(&text)?;
    let svg = if probe.get("vertices").is_some() {
        let path = from_json::<PathDto>(&text)?.to_path()?;
        svg_disc(&[(&path, "#1f6fb2")])
    } else {
        let poly = from_json::<PolygonDto>(&text)?.to_polygon()?;
        let mut boundary = poly.vertices().to_vec();
        boundary.push(boundary[0].clone());
        let outline = FareyPath::lift(&boundary, 0)?;
        let mut chords = Vec::new();
        for (u, v) in poly.diagonals() {
            let vs = [poly.vertices()[u].clone(), poly.vertices()[v].clone()];
            chords.push(FareyPath::lift(&vs, 0)?);
        }
        let mut layers: Vec<(&FareyPath, &str)> = vec![(&outline, "#1f6fb2")];
        layers.extend(chords.iter().map(|c| (c, "#b25a1f")));
        svg_disc(&layers)
    };
    print!("{svg}");
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------- roundtrip

#[derive(Args)]
struct RoundtripArgs {
    /// Number of random cases when no pair is given.
    #[arg(long, default_value_t = 20)]
    random: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Optional explicit pair; both must be given together.
    #[arg(long, requires = "delta")]
    gamma: Option<String>,
    #[arg(long, requires = "gamma")]
    delta: Option<String>,
    /// Window for the explicit pair.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true, default_value = "-3:4,-3:4")]
    window: Window2,
}

fn random_word(rng: &mut ChaCha8Rng, len: std::ops::RangeInclusive<usize>) -> Vec<i64> {
    let n = rng.random_range(len);
    (0..n).map(|_| rng.random_range(-3..=3)).collect()
}

/// One recovery check: fill, recover, refill, and confirm that one
/// element of SL2(Z) carries the pair onto the recovered pair.
fn roundtrip_once(pair: &PathPair, iw: (i64, i64), jw: (i64, i64)) -> Result<()> {
    let w = phi(pair, iw, jw)?;
    if !w.is_sl2()? || !w.is_tame()? {
        return Err(Error::Other(
            "filled window is not a tame SL2 window".into(),
        ));
    }
    let back = psi(&w)?;
    let again = phi_raw(&back, iw, jw)?;
    if again != w {
        return Err(Error::Other(
            "refilled window differs from the original".into(),
        ));
    }
    let seed_of = |p: &FareyPath, at: i64| -> Result<Mat2> {
        let l = p.lift_at(at)?;
        let m = p.lift_at(at + 1)?;
        Mat2::from_columns(&l.a, &l.b, &m.a, &m.b)
    };
    let g = seed_of(&back.gamma, iw.0)?.mul(&seed_of(&pair.gamma, iw.0)?.inverse());
    if !g.det().is_one() {
        return Err(Error::Other("recovery transform is not in SL2(Z)".into()));
    }
    let common = pair.gamma.slice(iw.0, iw.1)?.transformed(&g).vertices() == back.gamma.vertices()
        && pair.delta.slice(jw.0, jw.1)?.transformed(&g).vertices() == back.delta.vertices();
    if !common {
        return Err(Error::Other(
            "recovered pair is not a common transform of the input".into(),
        ));
    }
    Ok(())
}

fn cmd_roundtrip(a: RoundtripArgs) -> Result<ExitCode> {
    let (iw, jw) = (a.window.i, a.window.j);
    let mut cases: Vec<(String, PathPair)> = Vec::new();
    if let (Some(g), Some(d)) = (&a.gamma, &a.delta) {
        let pair = PathPair {
            gamma: parse_path_arg(g, iw.0, iw.1)?,
            delta: parse_path_arg(d, jw.0, jw.1)?,
        };
        cases.push(("given pair".into(), pair));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for k in 0..a.random {
            let gamma = farey_sl2::ItinerarySpec::periodic(
                &random_word(&mut rng, 1..=3),
                &random_word(&mut rng, 0..=4),
                &random_word(&mut rng, 1..=3),
            )
            .realize(iw.0 - 2, iw.1 + 2)?;
            let delta = farey_sl2::ItinerarySpec::periodic(
                &random_word(&mut rng, 1..=3),
                &random_word(&mut rng, 0..=4),
                &random_word(&mut rng, 1..=3),
            )
            .realize(jw.0 - 2, jw.1 + 2)?;
            cases.push((format!("case {k}"), PathPair { gamma, delta }));
        }
    }
    let total = cases.len();
    for (name, pair) in cases {
        if let Err(e) = roundtrip_once(&pair, iw, jw) {
            println!("{name}: {e}");
            return Ok(verdict(false));
        }
    }
    println!(
        "roundtrip ok: {total} case{}",
        if total == 1 { "" } else { "s" }
    );
    Ok(ExitCode::SUCCESS)
}
