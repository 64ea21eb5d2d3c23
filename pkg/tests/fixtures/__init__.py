"""Test Fixtures Package - Semigroup and automaton documents"""
