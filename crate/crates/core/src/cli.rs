//! Command-line front end.
//!
//! [`run`] takes the argument list and the three standard streams explicitly
//! so that it can be driven from tests.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automata::{Dfa, FiniteLanguage};
use crate::entropy::{entropy_spectral, gap_root, log2_biguint};
use crate::langgames::{counting_winning_set, winning_set, GameSolver, Limits, Player, TurnOrder};
use crate::verify::{run_suite, SuiteReport, VerifyConfig, SUITES};
use crate::winshift::{winning_reversed_dfa, AlternatingAutomaton, WinningShiftPresentation};
use crate::zoo::{named_shift, sft_from_forbidden, ShiftParams, SHIFT_NAMES};
use crate::Error;

/// Default word-length cap for game solving over binary alphabets.
const BINARY_CAP: usize = 16;
/// Default word-length cap for game solving over larger alphabets.
const WIDE_CAP: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "subshift-games", version, about = "Word games on subshifts and their winning shifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the winning set of a finite language, one order per line.
    Winset(WinsetArgs),
    /// Solve one game and print the winner with a winning strategy.
    Game(GameArgs),
    /// Play one game against a machine that uses the solved strategy.
    Play(PlayArgs),
    /// Build the winning shift of a sofic shift given by a DFA.
    Winshift(WinshiftArgs),
    /// Word-count and spectral entropies of a DFA language.
    Entropy(EntropyArgs),
    /// Write the DFA of a named shift or of an SFT.
    Zoo(ZooArgs),
    /// Entropies of the extended gap shifts.
    Table6(Table6Args),
    /// Run property suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct WinsetArgs {
    /// Finite language file, `-` for standard input.
    #[arg(long)]
    lang: PathBuf,
    /// Compute the counting winning set instead.
    #[arg(long)]
    counting: bool,
    /// Longest word length to solve (default 16 for binary, 10 otherwise).
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args, Debug)]
struct GameArgs {
    #[arg(long)]
    lang: PathBuf,
    /// Turn order such as `BAB`.
    #[arg(long)]
    order: TurnOrder,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    A,
    B,
}

impl From<Side> for Player {
    fn from(side: Side) -> Player {
        match side {
            Side::A => Player::A,
            Side::B => Player::B,
        }
    }
}

#[derive(Args, Debug)]
struct PlayArgs {
    #[arg(long)]
    lang: PathBuf,
    #[arg(long)]
    order: TurnOrder,
    /// The player controlled by the machine.
    #[arg(long, value_enum, ignore_case = true)]
    machine: Side,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args, Debug)]
struct WinshiftArgs {
    /// DFA file, `-` for standard input. Partial automata are completed first.
    #[arg(long)]
    dfa: PathBuf,
    /// Keep only orders extendable in both directions.
    #[arg(long, conflicts_with_all = ["emit_reversed", "emit_alternating"])]
    two_directional: bool,
    /// Emit the DFA for the reversed winning language.
    #[arg(long, conflicts_with = "emit_alternating")]
    emit_reversed: bool,
    /// Emit the alternating automaton.
    #[arg(long)]
    emit_alternating: bool,
}

#[derive(Args, Debug)]
struct EntropyArgs {
    #[arg(long)]
    dfa: PathBuf,
    /// Largest word length.
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Append the spectral entropy.
    #[arg(long)]
    spectral: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["name", "forbidden"]))]
struct ZooArgs {
    /// One of the named shifts.
    #[arg(long)]
    name: Option<String>,
    /// Finite language file of forbidden words.
    #[arg(long)]
    forbidden: Option<PathBuf>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Goldext,
    Gap,
}

#[derive(Args, Debug)]
struct Table6Args {
    #[arg(long, value_enum)]
    family: Family,
    /// Gap length; fixed to 1 for `goldext`.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    kmax: u64,
    #[arg(long)]
    csv: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Runs one command line. Returns 0 on success, 1 on domain or I/O errors
/// and 2 on usage errors.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, Error> {
        let io_err = |source| Error::Io { path: path.display().to_string(), source };
        if path.as_os_str() == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(io_err)?;
            Ok(text)
        } else {
            std::fs::read_to_string(path).map_err(io_err)
        }
    }

    fn emit(&mut self, text: &str) -> Result<(), Error> {
        self.stdout.write_all(text.as_bytes()).map_err(|source| Error::Io { path: "<stdout>".into(), source })
    }

    fn language(&mut self, path: &PathBuf) -> Result<FiniteLanguage, Error> {
        Ok(FiniteLanguage::parse_text(&self.read(path)?)?)
    }

    fn dfa(&mut self, path: &PathBuf) -> Result<Dfa, Error> {
        Ok(Dfa::parse_text(&self.read(path)?)?)
    }
}

/// Returns `Ok(false)` when the command ran but reported failures.
fn dispatch(command: Command, io: &mut Io) -> Result<bool, Error> {
    match command {
        Command::Winset(args) => winset(args, io),
        Command::Game(args) => game(args, io),
        Command::Play(args) => play(args, io),
        Command::Winshift(args) => winshift(args, io),
        Command::Entropy(args) => entropy(args, io),
        Command::Zoo(args) => zoo(args, io),
        Command::Table6(args) => table6(args, io),
        Command::Verify(args) => return verify(args, io),
    }
    .map(|()| true)
}

fn cap_for(lang: &FiniteLanguage, cap: Option<usize>) -> usize {
    cap.unwrap_or(if lang.alphabet().len() <= 2 { BINARY_CAP } else { WIDE_CAP })
}

fn check_cap(lang: &FiniteLanguage, length: usize, cap: usize) -> Result<(), Error> {
    if length > cap {
        return Err(Error::Invalid(format!(
            "words of length {length} exceed the game-solving cap {cap} for {} symbols; raise it with --cap",
            lang.alphabet().len()
        )));
    }
    Ok(())
}

fn print_words(lang: &FiniteLanguage) -> String {
    lang.words().iter().map(|w| lang.alphabet().format_word(w) + "\n").collect()
}

fn winset(args: WinsetArgs, io: &mut Io) -> Result<(), Error> {
    let lang = io.language(&args.lang)?;
    let cap = cap_for(&lang, args.cap);
    if let Some(&n) = lang.lengths().iter().next_back() {
        check_cap(&lang, n, cap)?;
    }
    let out = if args.counting {
        let bits = (cap as f64 * (lang.alphabet().len() as f64).log2()).ceil() as u32;
        counting_winning_set(&lang, Limits { max_log2_orders: bits })?
    } else {
        winning_set(&lang)?
    };
    io.emit(&print_words(&out))
}

fn solver_for<'a>(lang: &'a FiniteLanguage, order: &TurnOrder, cap: Option<usize>) -> Result<GameSolver<'a>, Error> {
    check_cap(lang, order.len(), cap_for(lang, cap))?;
    Ok(GameSolver::new(lang, order.clone()))
}

fn game(args: GameArgs, io: &mut Io) -> Result<(), Error> {
    let lang = io.language(&args.lang)?.restrict_length(args.order.len());
    let result = solver_for(&lang, &args.order, args.cap)?.result();
    let alphabet = lang.alphabet();
    let mut out = format!("winner: {}\n", result.winner);
    for (prefix, &c) in result.witness.moves() {
        let _ = writeln!(out, "{} -> {}", alphabet.format_word(prefix), alphabet.name(c));
    }
    io.emit(&out)
}

fn play(args: PlayArgs, io: &mut Io) -> Result<(), Error> {
    if args.lang.as_os_str() == "-" {
        return Err(Error::Invalid("play reads moves from standard input; pass the language as a file".into()));
    }
    let lang = io.language(&args.lang)?.restrict_length(args.order.len());
    let solver = solver_for(&lang, &args.order, args.cap)?;
    let machine = Player::from(args.machine);
    let alphabet = lang.alphabet();
    let choices = alphabet.symbols().join(" ");
    io.emit(&format!("order: {}  machine: {machine}  you: {}\n", args.order, machine.opponent()))?;
    let mut word = Vec::with_capacity(args.order.len());
    for (i, &p) in args.order.players().iter().enumerate() {
        if p == machine {
            let c = solver.best_move(&word);
            io.emit(&format!("move {}: machine ({p}) plays {}\n", i + 1, alphabet.name(c)))?;
            word.push(c);
            continue;
        }
        loop {
            io.emit(&format!("move {}: your move ({p}) [{choices}]: ", i + 1))?;
            io.stdout.flush().map_err(|source| Error::Io { path: "<stdout>".into(), source })?;
            let mut line = String::new();
            let read = io.stdin.read_line(&mut line).map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
            if read == 0 {
                return Err(Error::Invalid("input ended before the game finished".into()));
            }
            match alphabet.index(line.trim()) {
                Some(c) => {
                    word.push(c);
                    break;
                }
                None => io.emit(&format!("invalid symbol `{}`; expected one of {choices}\n", line.trim()))?,
            }
        }
    }
    let winner = if lang.contains(&word) { Player::A } else { Player::B };
    io.emit(&format!("word: {}\nwinner: {winner}\n", alphabet.format_word(&word)))
}

fn winshift(args: WinshiftArgs, io: &mut Io) -> Result<(), Error> {
    let d = io.dfa(&args.dfa)?.completed();
    let text = if args.emit_alternating {
        AlternatingAutomaton::from_dfa(&d)?.to_text()
    } else if args.emit_reversed {
        winning_reversed_dfa(&d)?.to_text()
    } else {
        let presentation = WinningShiftPresentation::compute(&d, args.two_directional)?;
        presentation.two_directional_dfa.unwrap_or(presentation.forward_dfa).to_text()
    };
    io.emit(&text)
}

fn entropy(args: EntropyArgs, io: &mut Io) -> Result<(), Error> {
    let d = io.dfa(&args.dfa)?;
    let counts = d.count_words_up_to(args.n);
    let sep = if args.csv { "," } else { " " };
    let mut out = format!("n{sep}count{sep}h_n\n");
    for (n, count) in counts.iter().enumerate().skip(1) {
        let h = log2_biguint(count) / n as f64;
        let _ = writeln!(out, "{n}{sep}{count}{sep}{}", format_float(h));
    }
    if args.spectral {
        let s = entropy_spectral(&d);
        let _ = writeln!(out, "spectral{sep}{}{sep}{}", format_float(s.value), format_float(s.entropy_bits));
    }
    io.emit(&out)
}

fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.12}")
    } else if x < 0.0 {
        "-inf".into()
    } else {
        "inf".into()
    }
}

fn zoo(args: ZooArgs, io: &mut Io) -> Result<(), Error> {
    let d = match (&args.name, &args.forbidden) {
        (Some(name), _) => {
            let defaults = ShiftParams::default();
            let params = ShiftParams {
                m: args.m.unwrap_or(defaults.m),
                k: args.k.unwrap_or(defaults.k),
                p: args.p.unwrap_or(defaults.p),
            };
            named_shift(name, params).map_err(|e| match e {
                crate::zoo::ZooError::UnknownShift(_) => {
                    Error::Invalid(format!("{e}; known shifts: {}", SHIFT_NAMES.join(", ")))
                }
                e => e.into(),
            })?
        }
        (None, Some(path)) => {
            let forbidden = io.language(path)?;
            sft_from_forbidden(forbidden.alphabet(), &forbidden)
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let text = d.to_text();
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source })
        }
        None => io.emit(&text),
    }
}

fn table6(args: Table6Args, io: &mut Io) -> Result<(), Error> {
    let m = match (args.family, args.m) {
        (Family::Goldext, None | Some(1)) => 1,
        (Family::Goldext, Some(m)) => {
            return Err(Error::Invalid(format!("the goldext family has gap length 1, got --m {m}")));
        }
        (Family::Gap, Some(m)) if m >= 1 => m,
        (Family::Gap, _) => return Err(Error::Invalid("the gap family needs --m of at least 1".into())),
    };
    if args.kmax == 0 {
        return Err(Error::Invalid("--kmax must be at least 1".into()));
    }
    let sep = if args.csv { "," } else { " " };
    let mut out = format!("k{sep}h{sep}h_rel\n");
    for k in 1..=args.kmax {
        let h = gap_root(m, k).log2();
        let rel = h / ((k + 1) as f64).log2();
        let _ = writeln!(out, "{k}{sep}{}{sep}{}", format_float(h), format_float(rel));
    }
    io.emit(&out)
}

fn verify(args: VerifyArgs, io: &mut Io) -> Result<bool, Error> {
    let names: Vec<&str> = if args.suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&args.suite.as_str()) {
        vec![args.suite.as_str()]
    } else {
        return Err(Error::Invalid(format!(
            "unknown suite `{}`; known suites: all, {}",
            args.suite,
            SUITES.join(", ")
        )));
    };
    let config = VerifyConfig { nmax: args.nmax, samples: args.samples, seed: args.seed };
    let reports: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> =
            names.iter().map(|&name| scope.spawn(move || run_suite(name, config).expect("listed suite"))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut out = String::new();
    for report in &reports {
        for line in &report.lines {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "{}", report.summary());
    }
    io.emit(&out)?;
    Ok(reports.iter().all(SuiteReport::ok))
}
