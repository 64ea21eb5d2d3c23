"""Integration Tests Package - Command-line runs and corpus-scale properties"""
