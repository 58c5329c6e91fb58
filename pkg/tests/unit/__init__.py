"""
Tests unitaires du solveur : arithmétique, élimination, boîtes et oracle
"""
