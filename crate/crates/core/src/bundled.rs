//! Example documents shipped with the crate.

/// Carnival wheel with every sector visible.
pub const WHEEL1: &str = include_str!("../data/wheel1.json");
/// Carnival wheel with one sector hidden.
pub const WHEEL2: &str = include_str!("../data/wheel2.json");
/// Spin the partly hidden wheel or keep a 6.00 fee.
pub const WHEEL_FEE: &str = include_str!("../data/wheel_fee.json");
/// Oil drilling with seismic soundings; every chance node is a probability
/// distribution.
pub const OIL1: &str = include_str!("../data/oil1.json");
/// Oil drilling with an electronic test whose results only bound capacity.
pub const OIL2: &str = include_str!("../data/oil2.json");

/// `(name, document)` pairs.
pub const ALL: [(&str, &str); 5] = [
    ("wheel1", WHEEL1),
    ("wheel2", WHEEL2),
    ("wheel_fee", WHEEL_FEE),
    ("oil1", OIL1),
    ("oil2", OIL2),
];

pub fn by_name(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, doc)| *doc)
}
