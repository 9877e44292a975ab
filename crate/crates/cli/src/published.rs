//! Values as printed in the published reference tables, transcribed verbatim
//! (including their misprints). Generated tables are never built from these;
//! they are only used to report where print and computation disagree.

/// One printed grid: row labels `n`, column labels `k`, and the printed cell
/// text in column order ("" for a blank cell).
pub struct PublishedGrid {
    pub columns: &'static [i64],
    pub rows: &'static [(i64, &'static [&'static str])],
}

/// A printed one-dimensional table `n -> value`.
pub struct PublishedSeries {
    pub values: &'static [(i64, &'static str)],
}

pub const ROMAN_FACTORIALS: PublishedSeries = PublishedSeries {
    values: &[
        (-6, "-1/120"),
        (-5, "1/24"),
        (-4, "-1/6"),
        (-3, "1/2"),
        (-2, "-1"),
        (-1, "1"),
        (0, "1"),
        (1, "1"),
        (2, "2"),
        (3, "6"),
        (4, "24"),
        (5, "120"),
        (6, "720"),
    ],
};

pub const RESISTANCE: PublishedSeries = PublishedSeries {
    values: &[
        (0, "0"),
        (1, "1"),
        (2, "1"),
        (3, "5/6"),
        (4, "2/3"),
        (5, "8/15"),
        (6, "13/30"),
        (7, "151/340"),
    ],
};

pub const ROMAN_COEFFICIENTS: PublishedGrid = PublishedGrid {
    columns: &[-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6],
    rows: &[
        (
            6,
            &[
                "-1/840", "1/252", "-1/56", "1/7", "1", "6", "15", "20", "15", "6", "1",
            ],
        ),
        (
            5,
            &[
                "-1/504", "1/168", "-1/42", "1/6", "1", "5", "10", "10", "5", "1", "1/6",
            ],
        ),
        (
            4,
            &[
                "-1/280", "1/105", "-1/30", "1/5", "1", "4", "6", "4", "1", "1/5", "-1/30",
            ],
        ),
        (
            3,
            &[
                "-1/140", "1/60", "-1/20", "1/4", "1", "3", "3", "1", "1/4", "-1/20", "1/60",
            ],
        ),
        (
            2,
            &[
                "-1/80", "1/30", "-1/12", "1/3", "1", "2", "1", "1/3", "-1/12", "1/30", "-1/60",
            ],
        ),
        (
            1,
            &[
                "-1/20", "1/12", "-1/6", "1/2", "1", "1", "1/2", "-1/6", "1/12", "-1/20", "1/30",
            ],
        ),
        (
            0,
            &[
                "-1/4", "1/3", "-1/2", "1", "1", "1", "-1/2", "1/3", "-1/4", "1/5", "-1/6",
            ],
        ),
        (
            -1,
            &["-1", "1", "-1", "1", "1", "-1", "1", "-1", "1", "-1", "1"],
        ),
        (
            -2,
            &["3", "-2", "1", "-1", "1", "-2", "3", "-4", "5", "-6", "7"],
        ),
        (
            -3,
            &[
                "-3", "1", "-1/2", "-1/2", "1", "-3", "6", "-10", "15", "-21", "28",
            ],
        ),
        (
            -4,
            &[
                "1", "-1/3", "-1/6", "-1/3", "1", "-4", "10", "-20", "35", "-56", "84",
            ],
        ),
        (
            -5,
            &[
                "-1/4", "-1/12", "-1/12", "-1/4", "1", "-5", "15", "-35", "70", "-126", "210",
            ],
        ),
    ],
};

pub const GAMMA_COEFFICIENTS: PublishedGrid = PublishedGrid {
    columns: &[-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6],
    rows: &[
        (
            6,
            &["0", "0", "0", "0", "1", "6", "15", "20", "15", "6", "1"],
        ),
        (
            5,
            &["0", "0", "0", "0", "1", "5", "10", "10", "5", "1", "0"],
        ),
        (4, &["0", "0", "0", "0", "1", "4", "6", "4", "1", "0", "0"]),
        (3, &["0", "0", "0", "0", "1", "3", "3", "1", "0", "0", "0"]),
        (2, &["0", "0", "0", "0", "1", "2", "1", "0", "0", "0", "0"]),
        (1, &["0", "0", "0", "0", "1", "1", "0", "0", "0", "0", "0"]),
        (0, &["0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"]),
        (
            -1,
            &["-1", "1", "-1", "1", "1", "-1", "1", "-1", "1", "-1", "1"],
        ),
        (
            -2,
            &["3", "-2", "1", "0", "1", "-2", "3", "-4", "5", "-6", "7"],
        ),
        (
            -3,
            &[
                "-3", "1", "0", "0", "1", "-3", "6", "-10", "15", "-21", "28",
            ],
        ),
        (
            -4,
            &[
                "1", "0", "0", "0", "1", "-4", "10", "-20", "35", "-56", "84",
            ],
        ),
        (
            -5,
            &[
                "0", "0", "0", "0", "1", "-5", "15", "-35", "70", "-126", "210",
            ],
        ),
    ],
};

pub const REGION_1: PublishedGrid = PublishedGrid {
    columns: &[0, 1, 2, 3, 4, 5, 6, 7],
    rows: &[
        (7, &["1", "7", "21", "35", "35", "21", "7", "1"]),
        (6, &["1", "6", "15", "20", "15", "6", "1", ""]),
        (5, &["1", "5", "10", "10", "5", "1", "", ""]),
        (4, &["1", "4", "6", "4", "1", "", "", ""]),
        (3, &["1", "3", "3", "1", "", "", "", ""]),
        (2, &["1", "2", "1", "", "", "", "", ""]),
        (1, &["1", "1", "", "", "", "", "", ""]),
        (0, &["1", "", "", "", "", "", "", ""]),
    ],
};

pub const REGION_2: PublishedGrid = PublishedGrid {
    columns: &[0, 1, 2, 3, 4, 5, 6],
    rows: &[
        (-1, &["1", "-1", "1", "-1", "1", "-1", "1"]),
        (-2, &["1", "-2", "3", "-4", "5", "-6", "7"]),
        (-3, &["1", "-3", "6", "-10", "15", "-21", "28"]),
        (-4, &["1", "-4", "10", "-20", "35", "-56", "84"]),
        (-5, &["1", "-5", "15", "-35", "70", "-126", "210"]),
    ],
};

pub const REGION_3: PublishedGrid = PublishedGrid {
    columns: &[-6, -5, -4, -3, -2, -1],
    rows: &[
        (-1, &["-1", "1", "-1", "1", "-1", "1"]),
        (-2, &["5", "-4", "3", "-2", "1", ""]),
        (-3, &["-10", "6", "-3", "1", "", ""]),
        (-4, &["10", "-4", "1", "", "", ""]),
        (-5, &["-5", "1", "", "", "", ""]),
        (-6, &["1", "", "", "", "", ""]),
    ],
};

pub const REGION_4: PublishedGrid = PublishedGrid {
    columns: &[1, 2, 3, 4, 5, 6, 7],
    rows: &[
        (6, &["", "", "", "", "", "", "1/7"]),
        (5, &["", "", "", "", "", "1/6", "-1/42"]),
        (4, &["", "", "", "", "1/5", "-1/30", "1/105"]),
        (3, &["", "", "", "1/4", "-1/20", "1/60", "-1/140"]),
        (2, &["", "", "1/3", "-1/12", "1/30", "-1/60", "1/105"]),
        (1, &["", "1/2", "-1/6", "1/12", "-1/20", "1/30", "-1/42"]),
        (0, &["1", "-1/2", "1/3", "-1/4", "1/5", "-1/6", "1/7"]),
    ],
};

pub const REGION_5: PublishedGrid = PublishedGrid {
    columns: &[-4, -3, -2, -1],
    rows: &[
        (6, &["-1/840", "1/252", "-1/56", "1/7"]),
        (5, &["-1/504", "1/168", "-1/42", "1/6"]),
        (4, &["-1/280", "1/105", "-1/30", "1/5"]),
        (3, &["-1/140", "1/60", "-1/20", "1/4"]),
        (2, &["-1/80", "1/30", "-1/12", "1/3"]),
        (1, &["-1/20", "1/12", "-1/6", "1/2"]),
        (0, &["-1/4", "1/3", "-1/2", "1"]),
    ],
};

pub const REGION_6: PublishedGrid = PublishedGrid {
    columns: &[-6, -5, -4, -3, -2, -1],
    rows: &[
        (-2, &["", "", "", "", "", "-1"]),
        (-3, &["", "", "", "", "-1/2", "-1/2"]),
        (-4, &["", "", "", "-1/3", "-1/6", "-1/3"]),
        (-5, &["", "", "-1/4", "-1/12", "-1/12", "-1/4"]),
        (-6, &["", "-1/5", "-1/20", "-1/30", "-1/20", "-1/5"]),
        (-7, &["-1/6", "-1/30", "-1/60", "-1/60", "-1/30", "-1/6"]),
    ],
};
