"""Utility modules for latcount: console UI and logging"""
