"""Tight lower bounds on relative entropy in terms of entropy differences,
the maximal surprisal variance, and their applications to coding, channel
capacity, hypothesis testing and thermodynamics.
"""
