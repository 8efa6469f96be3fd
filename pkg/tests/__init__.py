"""Test suite for rank2lift."""
