"""End-to-end and acceptance tests for the hyperconf toolkit"""
