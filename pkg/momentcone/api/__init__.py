"""HTTP API and wire models for momentcone"""
