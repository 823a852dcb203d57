"""Tests for Lapis Spider."""