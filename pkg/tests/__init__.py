"""Test suite for the hyperconf toolkit"""
