"""Unit tests for the hyperconf toolkit"""
