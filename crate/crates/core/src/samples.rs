//! Built-in quivers, also shipped as `.gq` files under `data/`.

use crate::dsl;
use crate::presentation::{validate, GentlePresentation, StrictPresentation};

pub const PROTOTYPE: &str = include_str!("../data/prototype.gq");
pub const TWO_CYCLE: &str = include_str!("../data/two_cycle.gq");
pub const TWO_CYCLE_RADICAL_SQUARE: &str = include_str!("../data/two_cycle_radical_square.gq");
pub const TWO_LOOPS: &str = include_str!("../data/two_loops.gq");
pub const TWO_LOOPS_COMMUTING: &str = include_str!("../data/two_loops_commuting.gq");
pub const CRAWLEY_BOEVEY: &str = include_str!("../data/crawley_boevey.gq");
pub const FREE_LOOP: &str = include_str!("../data/free_loop.gq");
pub const THREE_CYCLE: &str = include_str!("../data/three_cycle.gq");
pub const SQUARE_LOOPS: &str = include_str!("../data/square_loops.gq");

pub const SOURCES: [&str; 9] = [
    PROTOTYPE,
    TWO_CYCLE,
    TWO_CYCLE_RADICAL_SQUARE,
    TWO_LOOPS,
    TWO_LOOPS_COMMUTING,
    CRAWLEY_BOEVEY,
    FREE_LOOP,
    THREE_CYCLE,
    SQUARE_LOOPS,
];

/// Parses and validates a built-in source; these are known to be gentle.
pub fn load(text: &str) -> GentlePresentation {
    let (q, r) = dsl::parse(text).expect("built-in quiver parses");
    validate(q, r).expect("built-in quiver is gentle")
}

pub fn by_name(name: &str) -> Option<GentlePresentation> {
    SOURCES
        .iter()
        .map(|s| load(s))
        .find(|gp| gp.quiver().name() == name)
}

pub fn prototype() -> GentlePresentation {
    load(PROTOTYPE)
}

pub fn two_cycle() -> GentlePresentation {
    load(TWO_CYCLE)
}

pub fn two_cycle_radical_square() -> GentlePresentation {
    load(TWO_CYCLE_RADICAL_SQUARE)
}

pub fn two_loops() -> GentlePresentation {
    load(TWO_LOOPS)
}

pub fn two_loops_commuting() -> GentlePresentation {
    load(TWO_LOOPS_COMMUTING)
}

pub fn crawley_boevey() -> GentlePresentation {
    load(CRAWLEY_BOEVEY)
}

pub fn free_loop() -> GentlePresentation {
    load(FREE_LOOP)
}

pub fn three_cycle() -> GentlePresentation {
    load(THREE_CYCLE)
}

pub fn square_loops() -> GentlePresentation {
    load(SQUARE_LOOPS)
}

pub fn corpus() -> Vec<GentlePresentation> {
    SOURCES.iter().map(|s| load(s)).collect()
}

/// The admissible-complete members of [`corpus`].
pub fn strict_corpus() -> Vec<StrictPresentation> {
    corpus()
        .into_iter()
        .filter_map(|gp| StrictPresentation::new(gp).ok())
        .collect()
}

pub fn strict(gp: GentlePresentation) -> StrictPresentation {
    StrictPresentation::new(gp).expect("presentation is admissible-complete")
}
