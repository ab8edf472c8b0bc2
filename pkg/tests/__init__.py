"""Tests package for momentcone"""
