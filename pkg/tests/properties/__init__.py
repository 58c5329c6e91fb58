"""
Tests de propriétés (hypothesis) sur des instances aléatoires
"""
