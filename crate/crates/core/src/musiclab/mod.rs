//! MusicLab harness (in progress).
