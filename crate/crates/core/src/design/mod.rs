//! Seed enumeration, best-seed search and automaton size statistics.

mod best;
mod enumerate;
mod stats;

pub use best::{best_seed, rank, rank_seeds, DesignReport, SeedScore};
pub use enumerate::{enumerate_glyphs, enumerate_seeds, EnumSpec, Mode, SeedEnumeration, JOKER_GLYPH, PARTIAL_GLYPH};
pub use stats::{automaton_sizes, automaton_stats, format_stats_table, format_stats_tsv, AutomatonSizes, StatsRow};
