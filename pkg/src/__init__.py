# Dominating-set lab package
