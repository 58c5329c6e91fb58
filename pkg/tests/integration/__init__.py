"""
Tests d'intégration : problèmes de référence et ligne de commande
"""
