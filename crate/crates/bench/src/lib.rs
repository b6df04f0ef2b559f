//! Fixtures shared by the benchmarks.

use ghilb::reproduce::data;
use ghilb::{CharGroup, GroupSpec};

pub fn group(text: &str) -> CharGroup {
    CharGroup::new(&GroupSpec::parse(text).expect("fixture group parses"))
}

pub fn z11() -> CharGroup {
    group(data::Z11_GROUP)
}

pub fn z14() -> CharGroup {
    group(data::Z14_GROUP)
}

pub fn g55556() -> CharGroup {
    group(data::G55556_GROUP)
}
