"""
gan-gan: train a fleet of small MNIST GANs, snapshot their parameters every
epoch, train a GAN over those parameter vectors, and sample new GANs from it.
"""

__version__ = "0.1.0"
