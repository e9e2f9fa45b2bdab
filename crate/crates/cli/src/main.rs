//! `shufflelab` command-line front end.
//!
//! Every subcommand prints plain text by default and a single JSON document
//! with `--json`. Exit codes: 0 on success, 1 on a domain error or a failed
//! verification, 2 on a usage or parse error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use shufflelab::elmsley::{render_sides, shortest_words, SolutionSet};
use shufflelab::group::{
    closed_form_order, format_factored, group_order, render_report_table, verify_theorem,
    FamilyKind, GroupConfig, GroupOrderReport,
};
use shufflelab::power2::{
    display_card, display_cards, generate, parse_card, predict_from_ends, reveal_order,
    trick_session, DiagramOp, SpecialOrdering, TrickTranscript,
};
use shufflelab::shuffle::{bit_string, route_sides, route_top_to};
use shufflelab::{
    apply_word, element_order, identity_deck, Deck, Error, Family, ShuffleWord, Side,
};

const SIZE_CAP_VAR: &str = "SHUFFLELAB_SIZE_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "shufflelab",
    version,
    about = "Perfect shuffles, shuffle groups and special orderings"
)]
struct Cli {
    /// Print a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a shuffle word to a deck
    Apply(ApplyArgs),
    /// Order of the permutation a shuffle word performs
    Order(OrderArgs),
    /// Order of the group generated by the in and out shuffles of a family
    GroupOrder(GroupOrderArgs),
    /// Compare computed group orders with the closed forms
    Verify(VerifyArgs),
    /// Every shortest in/out word moving a card between two positions
    Elmsley(ElmsleyArgs),
    /// In/out word moving the top card to a position
    Route(RouteArgs),
    /// Predict a special ordering from its end cards, or run a shuffle session
    Trick(TrickArgs),
    /// Build a special ordering by repeated doubling
    Diagram(DiagramArgs),
}

#[derive(Args, Debug)]
struct ApplyArgs {
    /// Deck size 2n
    #[arg(long)]
    size: usize,
    /// Comma-separated shuffle word, e.g. `faro-in,inv:milk`
    #[arg(long, value_parser = parse_word)]
    word: ShuffleWord,
    /// Starting deck, e.g. `0 ~1 2 3`; defaults to the identity deck
    #[arg(long, value_parser = parse_deck)]
    deck: Option<Deck>,
}

#[derive(Args, Debug)]
struct OrderArgs {
    #[arg(long)]
    size: usize,
    #[arg(long, value_parser = parse_word)]
    word: ShuffleWord,
}

#[derive(Args, Debug)]
struct GroupOrderArgs {
    /// faro, flip or horse
    #[arg(long, value_parser = parse_kind)]
    family: FamilyKind,
    #[arg(long)]
    size: usize,
    /// Print the order as a product of prime powers
    #[arg(long)]
    factored: bool,
    /// Also print the closed form and whether it matches
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_kind)]
    family: FamilyKind,
    /// Comma-separated deck sizes
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
}

#[derive(Args, Debug)]
struct ElmsleyArgs {
    #[arg(long)]
    size: usize,
    /// faro or horse
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    from: usize,
    /// Target position; defaults to the top
    #[arg(long, default_value_t = 0)]
    to: usize,
}

#[derive(Args, Debug)]
struct RouteArgs {
    #[arg(long)]
    size: usize,
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    to: usize,
}

#[derive(Args, Debug)]
struct TrickArgs {
    /// Packet size is 2^k
    #[arg(long)]
    k: u32,
    /// Top card as shown, e.g. `A` or `4`
    #[arg(long, requires = "right", required_unless_present = "word")]
    left: Option<String>,
    /// Bottom card as shown
    #[arg(long, requires = "left")]
    right: Option<String>,
    /// Shuffle the sorted packet with this word and print the reveal
    #[arg(long, value_parser = parse_word, conflicts_with_all = ["left", "right"])]
    word: Option<ShuffleWord>,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    #[arg(long)]
    k: u32,
    /// First card, decimal or `0b`-prefixed binary
    #[arg(long, value_parser = parse_value)]
    first: u32,
    /// First doubling operation: `bit-J` or `complement`
    #[arg(long, value_parser = parse_op)]
    start: DiagramOp,
    /// Print one k-bit binary value per line
    #[arg(long)]
    binary: bool,
}

fn parse_word(s: &str) -> Result<ShuffleWord, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_deck(s: &str) -> Result<Deck, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_op(s: &str) -> Result<DiagramOp, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_value(s: &str) -> Result<u32, String> {
    match s.strip_prefix("0b") {
        Some(bits) => u32::from_str_radix(bits, 2),
        None => s.parse(),
    }
    .map_err(|e| format!("bad value {s:?}: {e}"))
}

/// A command's result in both renderings.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            e => Failure::Domain(e),
        }
    }
}

fn config() -> Result<GroupConfig, Failure> {
    let config = GroupConfig::default();
    match std::env::var(SIZE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|cap| config.with_size_cap(cap))
            .map_err(|_| {
                Failure::Usage(format!(
                    "{SIZE_CAP_VAR} must be a non-negative integer, got {v:?}"
                ))
            }),
        Err(_) => Ok(config),
    }
}

fn apply(args: ApplyArgs) -> Result<Output, Failure> {
    let deck = match args.deck {
        Some(deck) => deck,
        None => identity_deck(args.size)?,
    };
    if deck.len() != args.size {
        return Err(Error::SizeMismatch {
            expected: args.size,
            actual: deck.len(),
        }
        .into());
    }
    let result = apply_word(&args.word, &deck)?;
    let cards: Vec<Value> = result
        .cards()
        .iter()
        .map(|c| json!({ "label": c.label, "flipped": c.flipped }))
        .collect();
    Ok(Output::new(
        format!("{result}\n"),
        json!({
            "size": args.size,
            "word": args.word.to_string(),
            "deck": result.to_string(),
            "cards": cards,
        }),
    ))
}

fn order(args: OrderArgs) -> Result<Output, Failure> {
    let order = element_order(&args.word.element(args.size)?);
    Ok(Output::new(
        format!("{order}\n"),
        json!({ "size": args.size, "word": args.word.to_string(), "order": order.to_string() }),
    ))
}

fn group_order_cmd(args: GroupOrderArgs) -> Result<Output, Failure> {
    let family = args.family.at(args.size);
    let computed = group_order(family, &config()?)?;
    let shown = if args.factored {
        format_factored(&computed)
    } else {
        computed.to_string()
    };
    let mut json = json!({
        "family": args.family.name(),
        "size": args.size,
        "order": computed.to_string(),
        "factored": format_factored(&computed),
    });
    if !args.check {
        return Ok(Output::new(format!("{shown}\n"), json));
    }
    let closed = closed_form_order(family)?;
    let matches = closed.value == computed;
    let text = format!(
        "computed: {shown}\nclosed-form: {}\nformula: {}\ncase: {}\nmatch: {}\n",
        closed.value,
        closed.formula,
        closed.case,
        if matches { "yes" } else { "NO" }
    );
    json["closed_form"] = json!({
        "value": closed.value.to_string(),
        "formula": closed.formula,
        "case": closed.case,
    });
    json["match"] = json!(matches);
    Ok(Output {
        text,
        json,
        ok: matches,
    })
}

fn report_json(report: &Result<GroupOrderReport, Error>, size: usize) -> Value {
    match report {
        Ok(r) => json!({
            "size": r.size(),
            "computed": r.computed.to_string(),
            "factored": r.computed_factored(),
            "closed_form": r.closed_form.value.to_string(),
            "formula": r.closed_form.formula,
            "case": r.closed_form.case,
            "faro_counterpart": r.faro_counterpart.as_ref().map(|f| f.to_string()),
            "match": r.matches,
        }),
        Err(e) => json!({ "size": size, "error": e.to_string() }),
    }
}

fn verify(args: VerifyArgs) -> Result<Output, Failure> {
    let reports = verify_theorem(args.family, &args.sizes, &config()?);
    let all_match = reports.iter().all(|r| matches!(r, Ok(r) if r.matches));
    let rows: Vec<Value> = reports
        .iter()
        .zip(&args.sizes)
        .map(|(r, &size)| report_json(r, size))
        .collect();
    Ok(Output {
        text: render_report_table(&reports),
        json: json!({ "family": args.family.name(), "reports": rows, "all_match": all_match }),
        ok: all_match,
    })
}

fn sides_json(sides: &[Side]) -> Value {
    sides.iter().map(|s| s.token()).collect::<Vec<_>>().into()
}

fn elmsley(args: ElmsleyArgs) -> Result<Output, Failure> {
    let set: SolutionSet = shortest_words(args.size, args.family, args.from, args.to)?;
    if set.truncated {
        eprintln!(
            "warning: only the first {} words are listed",
            set.words.len()
        );
    }
    let words: Vec<Value> = set.words.iter().map(|w| sides_json(w)).collect();
    Ok(Output::new(
        set.render(),
        json!({
            "size": args.size,
            "from": set.from,
            "to": set.to,
            "length": set.length,
            "words": words,
            "truncated": set.truncated,
        }),
    ))
}

fn route(args: RouteArgs) -> Result<Output, Failure> {
    let word = route_top_to(args.to, args.size, args.family)?;
    let sides = route_sides(args.to);
    Ok(Output::new(
        format!("{}\n", render_sides(&sides)),
        json!({
            "size": args.size,
            "to": args.to,
            "binary": format!("{:b}", args.to),
            "sides": sides_json(&sides),
            "word": word.to_string(),
        }),
    ))
}

fn ordering_json(o: &SpecialOrdering) -> Value {
    json!({
        "k": o.k,
        "first": o.first,
        "start": o.start.to_string(),
        "skipped": o.skipped().to_string(),
        "ops": o.ops().iter().map(|op| op.to_string()).collect::<Vec<_>>(),
        "values": o.values,
        "display": display_cards(&o.values, o.k),
    })
}

fn transcript_json(t: &TrickTranscript, word: &ShuffleWord) -> Value {
    let values = t.final_values();
    let reveal: Vec<Value> = reveal_order(values.len())
        .into_iter()
        .map(|p| json!({ "position": p, "card": display_card(values[p], t.k) }))
        .collect();
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| json!({ "move": s.applied.to_string(), "values": s.values, "start": s.ordering.start.to_string() }))
        .collect();
    json!({
        "k": t.k,
        "word": word.to_string(),
        "steps": steps,
        "reveal": reveal,
        "ordering": ordering_json(&t.prediction),
    })
}

fn trick(args: TrickArgs) -> Result<Output, Failure> {
    if let Some(word) = args.word {
        let transcript = trick_session(args.k, &word)?;
        return Ok(Output::new(
            transcript.render(),
            transcript_json(&transcript, &word),
        ));
    }
    let (Some(left), Some(right)) = (args.left, args.right) else {
        return Err(Failure::Usage(
            "--left and --right are both required".into(),
        ));
    };
    let left = parse_card(&left, args.k)?;
    let right = parse_card(&right, args.k)?;
    let ordering = predict_from_ends(args.k, left, right)?;
    Ok(Output::new(
        format!("{}\n", display_cards(&ordering.values, args.k)),
        ordering_json(&ordering),
    ))
}

fn diagram(args: DiagramArgs) -> Result<Output, Failure> {
    let ordering = generate(args.k, args.first, args.start)?;
    let text = if args.binary {
        ordering
            .values
            .iter()
            .map(|&v| format!("{}\n", bit_string(v, args.k)))
            .collect()
    } else {
        let values: Vec<String> = ordering.values.iter().map(u32::to_string).collect();
        format!("{}\n", values.join(" "))
    };
    let mut json = ordering_json(&ordering);
    json["binary"] = ordering
        .values
        .iter()
        .map(|&v| bit_string(v, args.k))
        .collect::<Vec<_>>()
        .into();
    Ok(Output::new(text, json))
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Apply(a) => apply(a),
        Command::Order(a) => order(a),
        Command::GroupOrder(a) => group_order_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Elmsley(a) => elmsley(a),
        Command::Route(a) => route(a),
        Command::Trick(a) => trick(a),
        Command::Diagram(a) => diagram(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
