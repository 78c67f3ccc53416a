"""Tests for dioph-certify."""
