//! Reference multiplication tables: entry `k` is `+x_k`, `-k` is `-x_k`
//! and `0` is `-1`.

pub const OCTONIONS: [[i8; 7]; 7] = [
    [0, 3, -2, 5, -4, -7, 6],
    [-3, 0, 1, 6, 7, -4, -5],
    [2, -1, 0, 7, -6, 5, -4],
    [-5, -6, -7, 0, 1, 2, 3],
    [4, -7, 6, -1, 0, -3, 2],
    [7, 4, -5, -2, 3, 0, -1],
    [-6, 5, 4, -3, -2, 1, 0],
];

pub const SEDENIONS: [[i8; 15]; 15] = [
    [0, 3, -2, 5, -4, -7, 6, 9, -8, -11, 10, -13, 12, 15, -14],
    [-3, 0, 1, 6, 7, -4, -5, 10, 11, -8, -9, -14, -15, 12, 13],
    [2, -1, 0, 7, -6, 5, -4, 11, -10, 9, -8, -15, 14, -13, 12],
    [-5, -6, -7, 0, 1, 2, 3, 12, 13, 14, 15, -8, -9, -10, -11],
    [4, -7, 6, -1, 0, -3, 2, 13, -12, 15, -14, 9, -8, 11, -10],
    [7, 4, -5, -2, 3, 0, -1, 14, -15, -12, 13, 10, -11, -8, 9],
    [-6, 5, 4, -3, -2, 1, 0, 15, 14, -13, -12, 11, 10, -9, -8],
    [-9, -10, -11, -12, -13, -14, -15, 0, 1, 2, 3, 4, 5, 6, 7],
    [8, -11, 10, -13, 12, 15, -14, -1, 0, -3, 2, -5, 4, 7, -6],
    [11, 8, -9, -14, -15, 12, 13, -2, 3, 0, -1, -6, -7, 4, 5],
    [-10, 9, 8, -15, 14, -13, 12, -3, -2, 1, 0, -7, 6, -5, 4],
    [13, 14, 15, 8, -9, -10, -11, -4, 5, 6, 7, 0, -1, -2, -3],
    [-12, 15, -14, 9, 8, 11, -10, -5, -4, 7, -6, 1, 0, 3, -2],
    [-15, -12, 13, 10, -11, 8, 9, -6, -7, -4, 5, 2, -3, 0, 1],
    [14, -13, -12, 11, 10, -9, 8, -7, 6, -5, -4, 3, 2, -1, 0],
];

pub const TILDE_OCTONIONS: [[i8; 7]; 7] = [
    [0, 3, -2, 5, -4, 7, -6],
    [-3, 0, 1, 6, -7, -4, 5],
    [2, -1, 0, 7, 6, -5, -4],
    [-5, -6, -7, 0, 1, 2, 3],
    [4, 7, -6, -1, 0, 3, -2],
    [-7, 4, 5, -2, -3, 0, 1],
    [6, -5, 4, -3, 2, -1, 0],
];

pub const TILDE_SEDENIONS: [[i8; 15]; 15] = [
    [0, 3, -2, 5, -4, -7, 6, 9, -8, -11, 10, -13, 12, -15, 14],
    [-3, 0, 1, 6, 7, -4, -5, 10, 11, -8, -9, -14, 15, 12, -13],
    [2, -1, 0, 7, -6, 5, -4, 11, -10, 9, -8, 15, 14, -13, -12],
    [-5, -6, -7, 0, 1, 2, 3, 12, 13, 14, -15, -8, -9, -10, 11],
    [4, -7, 6, -1, 0, -3, 2, 13, -12, -15, -14, 9, -8, 11, 10],
    [7, 4, -5, -2, 3, 0, -1, 14, 15, -12, 13, 10, -11, -8, -9],
    [-6, 5, 4, -3, -2, 1, 0, 15, -14, 13, 12, -11, -10, 9, -8],
    [-9, -10, -11, -12, -13, -14, -15, 0, 1, 2, 3, 4, 5, 6, 7],
    [8, -11, 10, -13, 12, -15, 14, -1, 0, -3, 2, -5, 4, -7, 6],
    [11, 8, -9, -14, 15, 12, -13, -2, 3, 0, -1, -6, 7, 4, -5],
    [-10, 9, 8, 15, 14, -13, -12, -3, -2, 1, 0, 7, 6, -5, -4],
    [13, 14, -15, 8, -9, -10, 11, -4, 5, 6, -7, 0, -1, -2, 3],
    [-12, -15, -14, 9, 8, 11, 10, -5, -4, -7, -6, 1, 0, 3, 2],
    [15, -12, 13, 10, -11, 8, -9, -6, 7, -4, 5, 2, -3, 0, -1],
    [-14, 13, 12, -11, -10, 9, 8, -7, -6, 5, 4, -3, -2, 1, 0],
];
