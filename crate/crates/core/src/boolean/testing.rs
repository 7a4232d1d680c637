//! Reference contexts shared by unit tests.

use super::BooleanContext;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn from_strings(rows: &[&str]) -> BooleanContext {
    let objects = rows.first().map_or(0, |r| r.len());
    let incidence: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| r.bytes().map(|c| c == b'1').collect())
        .collect();
    BooleanContext::new(names("a", rows.len()), names("b", objects), &incidence).unwrap()
}

pub fn table1() -> BooleanContext {
    from_strings(&[
        "011100", //
        "000100", "100000", "000011", "001000", "000010",
    ])
}

pub fn table2() -> BooleanContext {
    from_strings(&[
        "0111000", //
        "0001000", "1000000", "0000011", "0110000", "0000110", "0010000", "0000111",
    ])
}

pub fn diagonal2() -> BooleanContext {
    from_strings(&["10", "01"])
}
