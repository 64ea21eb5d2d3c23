"""Unit Tests Package - Fast, isolated tests"""
