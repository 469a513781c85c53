# qcosine: complex cosine similarity through single-qubit interference circuits
