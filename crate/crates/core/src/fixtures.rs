//! Presentations shipped with the crate, addressable by name.

use crate::config::parse_config;
use crate::error::{Error, Result};
use crate::presentation::Presentation;

pub const FIXTURES: &[(&str, &str)] = &[
    ("bs3", include_str!("../fixtures/bs3.toml")),
    ("bs3_trivial", include_str!("../fixtures/bs3_trivial.toml")),
    ("p1", include_str!("../fixtures/p1.toml")),
    ("p1_trivial", include_str!("../fixtures/p1_trivial.toml")),
    ("wgr", include_str!("../fixtures/wgr.toml")),
    ("wgr_ext", include_str!("../fixtures/wgr_ext.toml")),
    ("bundle", include_str!("../fixtures/bundle.toml")),
    ("bundle_ext", include_str!("../fixtures/bundle_ext.toml")),
    ("wflag", include_str!("../fixtures/wflag.toml")),
    ("wflag_ext", include_str!("../fixtures/wflag_ext.toml")),
    ("delpezzo", include_str!("../fixtures/delpezzo.toml")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Result<Presentation> {
    let t = text(name).ok_or_else(|| Error::Parse(format!("unknown fixture {name:?}")))?;
    parse_config(t)
}
