//! Fixture documents shipped with the binary.

pub struct BundledFixture {
    pub name: &'static str,
    pub description: &'static str,
    pub text: &'static str,
}

pub const FIXTURES: [BundledFixture; 5] = [
    BundledFixture {
        name: "example43b",
        description: "two-object categories, f2 collapsed onto an identity, k×k with a swap",
        text: include_str!("../fixtures/example43b.toml"),
    },
    BundledFixture {
        name: "monoid_c2",
        description: "C2 acting on k×k by the swap, identity functor",
        text: include_str!("../fixtures/monoid_c2.toml"),
    },
    BundledFixture {
        name: "poset_chain3",
        description: "the chain x < y < z with k, k, k×k and the identity functor",
        text: include_str!("../fixtures/poset_chain3.toml"),
    },
    BundledFixture {
        name: "groupoid_c2_to_triv",
        description: "C2 onto the trivial group with the swap action on k×k",
        text: include_str!("../fixtures/groupoid_c2_to_triv.toml"),
    },
    BundledFixture {
        name: "parallel_collapse",
        description: "two parallel arrows identified; fiber condition fails",
        text: include_str!("../fixtures/parallel_collapse.toml"),
    },
];

pub fn fixture(name: &str) -> Option<&'static BundledFixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
