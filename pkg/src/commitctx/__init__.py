"""Commit representation and classification via AST path contexts.

A commit is represented by the symmetric difference of the path-context
sets extracted from the pre- and post-commit versions of every changed
method.  Three classifier families operate on top of that representation
(or its token-based counterpart): bag-of-words + linear SVM, a token
LSTM, and an attention network over path contexts with a swappable
classification head for transfer learning.
"""

__version__ = "0.1.0"
