"""Generators and reference oracles for hyperconf tests"""
