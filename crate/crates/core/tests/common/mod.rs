//! CLI invocations whose output is checked in under `tests/golden`.

pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "enumerate_h3344.txt",
        &["enumerate-admissible", "--h", "3,3,4,4"],
    ),
    (
        "classify_h3344_w3214.json",
        &["classify", "--h", "3,3,4,4", "--w", "3214", "--json"],
    ),
    (
        "classify_h3344_w2134.json",
        &["classify", "--h", "3,3,4,4", "--w", "2134", "--json"],
    ),
    ("graph_h223.dot", &["graph", "--h", "2,2,3"]),
    (
        "graph_h233_w213.dot",
        &["graph", "--h", "2,3,3", "--w", "213"],
    ),
    (
        "graph_h233_w213.json",
        &["graph", "--h", "2,3,3", "--w", "213", "--format", "json"],
    ),
    (
        "classify_h345666_w236451.json",
        &["classify", "--h", "3,4,5,6,6,6", "--w", "236451", "--json"],
    ),
    (
        "roots_a2_tables.txt",
        &[
            "roots", "--type", "A", "--rank", "2", "--m", "a1,a2", "--tables",
        ],
    ),
    (
        "roots_c2_tables.txt",
        &[
            "roots",
            "--type",
            "C",
            "--rank",
            "2",
            "--m",
            "a1,a2,a1+a2",
            "--tables",
        ],
    ),
];
